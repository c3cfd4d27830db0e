__license__ = """
VLimits is free software; you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation; either version 2 of the License, or
(at your option) any later version.

VLimits is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License along
with VLimits; if not, write to the Free Software Foundation, Inc.,
51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA."""

import os
import sys
import time

STD_ERROR_HANDLE = -12
ENABLE_VIRTUAL_TERMINAL_PROCESSING = 0x0004


def _enable_console_sequences():
    """
    Switch a Windows console on stderr to VT100 mode.

    @return: Whether escape sequences can be written to stderr.
    @rtype:  C{bool}
    """
    if os.name != "nt":
        return True
    try:
        from ctypes import byref, windll
        from ctypes.wintypes import DWORD
    except ImportError:
        return False
    kernel32 = windll.kernel32
    handle = kernel32.GetStdHandle(STD_ERROR_HANDLE)
    mode = DWORD()
    if not handle or not kernel32.GetConsoleMode(handle, byref(mode)):
        return False
    if mode.value & ENABLE_VIRTUAL_TERMINAL_PROCESSING:
        return True
    return bool(kernel32.SetConsoleMode(handle, mode.value | ENABLE_VIRTUAL_TERMINAL_PROCESSING))


"""
Whether stderr understands escape sequences, decided on first use.
"""
console_sequences = None

EXIT_OK = 0
EXIT_VERIFY = 1  # A verification suite failed
EXIT_DOMAIN = 2  # Usage error or refusal on domain grounds
EXIT_PARSE = 3  # Malformed input


def check_range(value, min_value, max_value, name, pos=None):
    """
    Check if a value is within a certain range and raise an error if it's not.

    @param value: The value to check.
    @type value: C{int}

    @param min_value: Minimum valid value.
    @type min_value: C{int}

    @param max_value: Maximum valid value, C{None} for no upper bound.
    @type max_value: C{int} or C{None}

    @param name: Name of the variable that is being tested.
    @type name: C{str}

    @param pos: Position information from the variable being tested.
    @type pos: L{Position}
    """
    if value < min_value or (max_value is not None and value > max_value):
        raise RangeError(value, min_value, max_value, name, pos)


class Position:
    """
    Base class representing a position in an input.

    @ivar filename: Name of the file (or option) the input came from.
    @type filename: C{str}
    """

    def __init__(self, filename):
        self.filename = filename

    def __str__(self):
        return '"{}"'.format(self.filename)


class LinePosition(Position):
    """
    Line in a file.

    @ivar line_start: Line number (starting with 1) where the position starts.
    @type line_start: C{int}
    """

    def __init__(self, filename, line_start):
        Position.__init__(self, filename)
        self.line_start = line_start

    def __str__(self):
        return '"{}", line {:d}'.format(self.filename, self.line_start)


class FieldPosition(Position):
    """
    Field inside a structured (JSON) document, like C{edges[2].length}.

    @ivar field: Path to the offending field.
    @type field: C{str}
    """

    def __init__(self, filename, field):
        Position.__init__(self, filename)
        self.field = field

    def __str__(self):
        return '"{}", field {}'.format(self.filename, self.field)

    def child(self, name):
        """
        Position of a member of this field.

        @param name: Key (C{str}) or list index (C{int}) of the member.
        @type  name: C{str} or C{int}

        @return: The nested position.
        @rtype:  L{FieldPosition}
        """
        if isinstance(name, int):
            return FieldPosition(self.filename, "{}[{:d}]".format(self.field, name))
        if self.field == "":
            return FieldPosition(self.filename, name)
        return FieldPosition(self.filename, "{}.{}".format(self.field, name))


class OptionPosition(Position):
    """
    Character column inside the value of a command line option.

    @ivar column: Column (starting with 1) in the option value.
    @type column: C{int} or C{None}
    """

    def __init__(self, option, column=None):
        Position.__init__(self, option)
        self.column = column

    def __str__(self):
        if self.column is None:
            return "option {}".format(self.filename)
        return "option {}, column {:d}".format(self.filename, self.column)


class ScriptError(Exception):
    exit_code = EXIT_DOMAIN

    def __init__(self, value, pos=None):
        Exception.__init__(self, value)
        self.value = value
        self.pos = pos

    def __str__(self):
        if self.pos is None:
            return self.value
        return str(self.pos) + ": " + self.value


class ParseError(ScriptError):
    """
    Input that cannot be read: bad JSON, bad value lists, loops, zero characters.
    """

    exit_code = EXIT_PARSE


class DomainError(ScriptError):
    """
    Well-formed request that is outside of what can be computed.
    """

    exit_code = EXIT_DOMAIN


class RangeError(ScriptError):
    exit_code = EXIT_DOMAIN

    def __init__(self, value, min_value, max_value, name, pos=None):
        upper = "" if max_value is None else str(max_value)
        ScriptError.__init__(
            self, name + " out of range " + str(min_value) + ".." + upper + ", encountered " + str(value), pos
        )


class VerificationError(ScriptError):
    """
    An invariant suite found a counterexample.
    """

    exit_code = EXIT_VERIFY


class Warning:
    GENERIC = 0
    WINDOW = 1  # Truncation window diagnostics
    disabled = None


VERBOSITY_WARNING = 1  # Verbosity level for warnings
VERBOSITY_INFO = 2  # Verbosity level for info messages
VERBOSITY_PROGRESS = 3  # Verbosity level for progress feedback
VERBOSITY_TIMING = 4  # Verbosity level for timing information

VERBOSITY_MAX = 4  # Maximum verbosity level

"""
Verbosity level for console output.
"""
verbosity_level = VERBOSITY_PROGRESS


def set_verbosity(level):
    global verbosity_level
    verbosity_level = level


def _isatty(stream):
    try:
        return stream.isatty()
    except (AttributeError, ValueError):
        return False


def _stderr_sequences():
    """
    Whether coloured and in-place output can be written to stderr.
    """
    global console_sequences
    if not _isatty(sys.stderr):
        return False
    if console_sequences is None:
        console_sequences = _enable_console_sequences()
    return console_sequences


def print_eol(msg):
    """
    Clear current line and print message without linefeed.
    """
    if not _stderr_sequences():
        return

    print("\r" + msg + "\033[K", end="", file=sys.stderr)


"""
Current progress message.
"""
progress_message = None

"""
Timestamp when the current processing step started.
"""
progress_start_time = None

"""
Timestamp of the last incremental progress update.
"""
progress_update_time = None


def hide_progress():
    if progress_message is not None:
        print_eol("")


def show_progress():
    if progress_message is not None:
        print_eol(progress_message)


def clear_progress():
    global progress_message
    global progress_start_time
    global progress_update_time
    hide_progress()

    if (progress_message is not None) and (verbosity_level >= VERBOSITY_TIMING):
        print(
            "{} {:.1f} s".format(progress_message, time.process_time() - progress_start_time),
            file=sys.stderr,
        )

    progress_message = None
    progress_start_time = None
    progress_update_time = None


def print_progress(msg, incremental=False):
    """
    Output progress information to the user.

    @param msg: Progress message.
    @type  msg: C{str}

    @param incremental: True if this message is updated incrementally (that is, very often).
    @type  incremental: C{bool}
    """
    if verbosity_level < VERBOSITY_PROGRESS:
        return

    global progress_message
    global progress_start_time
    global progress_update_time

    if (not incremental) and (progress_message is not None):
        clear_progress()

    progress_message = msg

    if incremental:
        t = time.process_time()
        if (progress_update_time is not None) and (t - progress_update_time < 1):
            return
        progress_update_time = t
    else:
        progress_start_time = time.process_time()

    print_eol(msg)


def print_info(msg):
    """
    Output a pure informational message to the user.
    """
    if verbosity_level < VERBOSITY_INFO:
        return

    hide_progress()
    print(" vlimits info: " + msg, file=sys.stderr)
    show_progress()


def print_warning(type, msg, pos=None):
    """
    Output a warning message to the user.
    """
    if verbosity_level < VERBOSITY_WARNING:
        return
    if Warning.disabled and type in Warning.disabled:
        return
    if pos:
        msg = str(pos) + ": " + msg

    msg = " vlimits warning: " + msg

    if _stderr_sequences():
        msg = "\033[93m" + msg + "\033[0m"

    hide_progress()
    print(msg, file=sys.stderr)
    show_progress()


def print_error(msg, pos=None):
    """
    Output an error message to the user.
    """
    if pos:
        msg = str(pos) + ": " + msg
    else:
        clear_progress()

    msg = " vlimits ERROR: " + msg

    if _stderr_sequences():
        msg = "\033[91m" + msg + "\033[0m"

    hide_progress()
    print(msg, file=sys.stderr)
    show_progress()
