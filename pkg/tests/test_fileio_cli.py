"""File formats and the command-line front-end, including exit codes."""

import os

import pytest

from stalkrec.cli import main
from stalkrec.family import FromSubmodule
from stalkrec.fileio import (
    FileFormatError, parse_family, parse_module, write_family, write_module,
)

DATA = os.path.join(os.path.dirname(__file__), "..", "demos", "data")


def data(name):
    return os.path.join(DATA, name)


def test_parse_family_file():
    fam = parse_family(data("x2xy.fam"))
    assert fam.rank == 1
    assert isinstance(fam.generic, FromSubmodule)
    assert sorted(map(str, fam.generic.G.groebner())) == ["(x*y)", "(x^2)"]


def test_parse_module_file():
    ctx, M = parse_module(data("kt2.mod"))
    assert ctx.flavor == "univariate"
    assert M.ngens == 1
    assert [str(r) for r in M.relations.generators] == ["(t^2)"]


def test_family_write_read_roundtrip(tmp_path):
    fam = parse_family(data("example5_truncated.fam"))
    out = tmp_path / "copy.fam"
    write_family(str(out), fam)
    fam2 = parse_family(str(out))
    assert fam2.rank == fam.rank
    assert [str(p) for p in fam2.explicit_primes()] == \
        [str(p) for p in fam.explicit_primes()]
    for p in fam.explicit_primes():
        assert fam.stalk_at(p).contracted().eq(fam2.stalk_at(p).contracted())


def test_module_write_read_roundtrip(tmp_path):
    ctx, M = parse_module(data("kt2.mod"))
    out = tmp_path / "copy.mod"
    write_module(str(out), ctx, M)
    ctx2, M2 = parse_module(str(out))
    assert ctx2 == ctx
    assert M2.relations.eq(M.relations)


def test_parse_errors_are_flagged(tmp_path):
    bad = tmp_path / "bad.fam"
    bad.write_text("[ring]\nvariables = [\n")
    with pytest.raises(FileFormatError):
        parse_family(str(bad))
    missing = tmp_path / "missing_generic.fam"
    missing.write_text('[ring]\nvariables = ["x"]\nflavor = "monomial"\n')
    with pytest.raises(FileFormatError):
        parse_family(str(missing))
    wrongflavor = tmp_path / "wrong.fam"
    wrongflavor.write_text(
        '[ring]\nvariables = ["x"]\nflavor = "monomial"\n'
        '[[entry]]\nprime = { poly = "x" }\ngenerators = [["x"]]\n'
        '[generic]\nrule = "full-stalk"\n')
    with pytest.raises(FileFormatError):
        parse_family(str(wrongflavor))


def test_cli_exit_codes(capsys):
    assert main(["check", "--family", data("x2xy.fam")]) == 0
    assert main(["check", "--family", data("example5.fam")]) == 1
    assert main(["check", "--family", data("does_not_exist.fam")]) == 2
    capsys.readouterr()


def test_cli_reconstruct_output(capsys):
    code = main(["reconstruct", "--family", data("x2xy.fam")])
    out = capsys.readouterr().out
    assert code == 0
    assert "F = ((x*y), (x^2))" in out
    assert "Ass = {(x), (x,y)}" in out


def test_cli_machine_format(capsys):
    code = main(["reconstruct", "--family", data("x2xy.fam"),
                 "--format", "machine"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert "ok=true" in lines
    assert all("=" in line for line in lines)


def test_cli_glue_section(capsys):
    code = main(["glue-section", "--module", data("kt2.mod"),
                 "--germs", data("kt2.germs")])
    out = capsys.readouterr().out
    assert code == 0
    assert "v = (t + 1)" in out


def test_cli_germscoh(capsys):
    assert main(["germscoh", "check", "--object", data("ax.gc")]) == 0
    assert main(["germscoh", "demo-example12", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "obstruction PRESENT" in out


def test_cli_oracle(capsys):
    code = main(["oracle", "--ring", "z6", "--format", "machine"])
    out = capsys.readouterr().out
    assert code == 0
    assert "violations=0" in out


def test_cli_demo_example5(capsys):
    code = main(["demo", "example5"])
    out = capsys.readouterr().out
    assert code == 0
    assert "infinite" in out
    assert "matches the product ideal: True" in out


def test_cli_deterministic_across_jobs(capsys):
    main(["oracle", "--ring", "all", "-j", "1", "--format", "machine"])
    run1 = capsys.readouterr().out
    main(["oracle", "--ring", "all", "-j", "8", "--format", "machine"])
    run8 = capsys.readouterr().out
    assert run1 == run8
