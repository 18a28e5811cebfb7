import pytest

from zdposet.cli import main
from zdposet.poset import direct_product, generate, parse_poset


@pytest.fixture
def fig1_path(tmp_path, figure1_text):
    p = tmp_path / "figure1.poset"
    p.write_text(figure1_text)
    return str(p)


def write_poset(tmp_path, P, name="input.poset"):
    p = tmp_path / name
    p.write_text(P.to_text())
    return str(p)


def test_info_figure1(fig1_path, capsys):
    assert main(["info", fig1_path]) == 0
    out = capsys.readouterr().out
    assert "elements: 10" in out
    assert "boolean: yes" in out
    assert "atoms: 4 (q1 q2 q3 q4)" in out
    assert "weight: 4" in out
    assert "zero-divisors: 9" in out


def test_info_m_atoms(tmp_path, capsys):
    path = write_poset(tmp_path, generate("m_atoms", 3))
    assert main(["info", path]) == 0
    out = capsys.readouterr().out
    assert "boolean: no (not distributive (witness: a1,a2,a3))" in out


def test_info_empty_file_is_usage_error(tmp_path, capsys):
    p = tmp_path / "empty.poset"
    p.write_text("")
    assert main(["info", str(p)]) == 2
    assert "error:" in capsys.readouterr().err


def test_info_missing_file(tmp_path, capsys):
    assert main(["info", str(tmp_path / "nope.poset")]) == 2


def test_zdg_dot(fig1_path, capsys):
    assert main(["zdg", fig1_path]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph zdg {\n")
    assert out.count(" -- ") == 10


def test_zdg_empty_graph(tmp_path, capsys):
    path = write_poset(tmp_path, generate("chain", 3))
    assert main(["zdg", path]) == 0
    assert capsys.readouterr().out == "graph zdg {\n}\n"


def test_check_figure1(fig1_path, capsys):
    assert main(["check", fig1_path]) == 0
    out = capsys.readouterr().out
    assert "well-covered: yes" in out
    assert "very-well-covered: yes" in out
    assert "CM(MY): yes [boolean-certificate]" in out
    assert "CM(Reisner): yes" in out
    assert "consistent: yes" in out


def test_check_product_3_3_3(tmp_path, capsys):
    carrier = direct_product([generate("chain", 3)] * 3).carrier
    path = write_poset(tmp_path, carrier)
    assert main(["check", path]) == 0
    out = capsys.readouterr().out
    assert "well-covered: no" in out
    assert "CM(MY): no [not-well-covered]" in out
    assert "consistent: yes" in out


def test_check_reisner_skip_cap(tmp_path, capsys):
    carrier = direct_product([generate("chain", 3)] * 3).carrier
    path = write_poset(tmp_path, carrier)
    assert main(["check", path, "--max-homology-vertices", "4"]) == 0
    out = capsys.readouterr().out
    assert "CM(Reisner): skipped" in out


def test_check_verbose_prints_face_table(tmp_path, capsys):
    path = write_poset(tmp_path, generate("boolean_lattice", 2))
    assert main(["check", path, "--verbose"]) == 0
    out = capsys.readouterr().out
    assert "face\tlink-dim\tbetti" in out
    assert "{a1}" in out
    assert "CM: yes" in out


def test_check_empty_graph(tmp_path, capsys):
    path = write_poset(tmp_path, generate("chain", 3))
    assert main(["check", path]) == 0
    out = capsys.readouterr().out
    assert "zero-divisor graph is empty" in out


def test_export_cube_m2(tmp_path, capsys):
    path = write_poset(tmp_path, generate("boolean_lattice", 3))
    assert main(["export", path, "-d", "m2"]) == 0
    out = capsys.readouterr().out
    gens = out.split("monomialIdeal(")[1].rstrip(");\n").split(", ")
    assert len(gens) == 6


def test_export_two_square_singular_golden(tmp_path, capsys):
    path = write_poset(tmp_path, generate("boolean_lattice", 2))
    assert main(["export", path, "-d", "singular"]) == 0
    assert capsys.readouterr().out == (
        "// v0 = a1\n"
        "// v1 = a2\n"
        "ring R = 0, (v0..v1), dp;\n"
        "ideal I = v0*v1;\n"
    )


def test_export_empty_graph_fails(tmp_path, capsys):
    path = write_poset(tmp_path, generate("chain", 3))
    assert main(["export", path, "-d", "m2"]) == 2
    assert "empty" in capsys.readouterr().err


def test_sweep(tmp_path, capsys):
    p = tmp_path / "sizes.txt"
    p.write_text("2,2,2\n3,3,3\n2,3\n")
    assert main(["sweep", str(p)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("sizes\t")
    assert lines[1].endswith("yes\tyes\tyes")
    assert lines[2].endswith("no\tno\tno")


def test_sweep_bad_line(tmp_path, capsys):
    p = tmp_path / "sizes.txt"
    p.write_text("2,2\n2\n")
    assert main(["sweep", str(p)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_gen_roundtrip(tmp_path, capsys):
    assert main(["gen", "atom_coatom", "4"]) == 0
    text = capsys.readouterr().out
    P = parse_poset(text)
    assert P == generate("atom_coatom", 4)


def test_gen_unknown_catalog(capsys):
    assert main(["gen", "zorp", "3"]) == 2


def test_output_flag(tmp_path, fig1_path):
    out_file = tmp_path / "graph.dot"
    assert main(["zdg", fig1_path, "-o", str(out_file)]) == 0
    assert out_file.read_text().startswith("graph zdg {")


def test_internal_disagreement_trips_exit_1(fig1_path, capsys, monkeypatch):
    # no real input can disagree; force the oracle to lie to test the trap
    import zdposet.cli as cli_mod

    monkeypatch.setattr(
        cli_mod.homology, "reisner_cm", lambda C, cap: (False, ((), 0))
    )
    assert main(["check", fig1_path]) == 1
    out = capsys.readouterr().out
    assert "consistent: no" in out
    assert "disagrees" in out


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["info"])  # missing input
    assert exc.value.code == 2


def test_bad_cap_rejected(fig1_path):
    with pytest.raises(SystemExit) as exc:
        main(["check", fig1_path, "--max-vertices", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", fig1_path, "--workers", "0"])
    assert exc.value.code == 2
