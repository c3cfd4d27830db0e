import pytest

from vlimits import generic


@pytest.fixture
def verbosity():
    old = generic.verbosity_level
    yield generic.set_verbosity
    generic.set_verbosity(old)


def test_positions():
    assert str(generic.Position("g.json")) == '"g.json"'
    assert str(generic.LinePosition("g.json", 4)) == '"g.json", line 4'
    root = generic.FieldPosition("g.json", "")
    assert str(root.child("edges").child(2).child("a")) == '"g.json", field edges[2].a'
    assert str(generic.OptionPosition("--a", 5)) == "option --a, column 5"
    assert str(generic.OptionPosition("--a")) == "option --a"


def test_check_range():
    generic.check_range(3, 1, None, "n")
    generic.check_range(3, 1, 3, "n")
    with pytest.raises(generic.RangeError) as info:
        generic.check_range(0, 1, None, "n_max", generic.OptionPosition("--nmax"))
    assert str(info.value) == "option --nmax: n_max out of range 1.., encountered 0"
    assert info.value.exit_code == generic.EXIT_DOMAIN


def test_exit_codes():
    assert generic.ParseError("x").exit_code == generic.EXIT_PARSE
    assert generic.DomainError("x").exit_code == generic.EXIT_DOMAIN
    assert generic.VerificationError("x").exit_code == generic.EXIT_VERIFY
    assert str(generic.DomainError("plain")) == "plain"


def test_warnings(verbosity, capsys):
    verbosity(generic.VERBOSITY_WARNING)
    generic.print_warning(generic.Warning.WINDOW, "too small", generic.OptionPosition("--fbox"))
    assert capsys.readouterr().err == " vlimits warning: option --fbox: too small\n"
    generic.print_info("hidden")
    assert capsys.readouterr().err == ""
    verbosity(0)
    generic.print_warning(generic.Warning.GENERIC, "quiet")
    generic.print_error("loud")
    assert capsys.readouterr().err == " vlimits ERROR: loud\n"


def test_disabled_warnings(verbosity, monkeypatch, capsys):
    verbosity(generic.VERBOSITY_INFO)
    monkeypatch.setattr(generic.Warning, "disabled", {generic.Warning.WINDOW})
    generic.print_warning(generic.Warning.WINDOW, "skipped")
    generic.print_info("shown")
    assert capsys.readouterr().err == " vlimits info: shown\n"


class Console:
    def __init__(self):
        self.text = ""

    def isatty(self):
        return True

    def write(self, text):
        self.text += text

    def flush(self):
        pass


def test_console_colours(verbosity, monkeypatch):
    verbosity(generic.VERBOSITY_WARNING)
    console = Console()
    monkeypatch.setattr(generic.sys, "stderr", console)
    monkeypatch.setattr(generic, "console_sequences", True)
    generic.print_error("loud")
    assert console.text == "\033[91m vlimits ERROR: loud\033[0m\n"

    console.text = ""
    monkeypatch.setattr(generic, "console_sequences", False)
    generic.print_warning(generic.Warning.GENERIC, "plain")
    generic.print_eol("progress")
    assert console.text == " vlimits warning: plain\n"


def test_console_sequences_decided_once(monkeypatch):
    calls = []
    monkeypatch.setattr(generic.sys, "stderr", Console())
    monkeypatch.setattr(generic, "console_sequences", None)
    monkeypatch.setattr(generic, "_enable_console_sequences", lambda: calls.append(1) or False)
    assert generic._stderr_sequences() is False
    assert generic._stderr_sequences() is False
    assert calls == [1]
