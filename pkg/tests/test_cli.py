import json

import numpy as np
import pytest

from qubitgeo.cli import main
from qubitgeo.statefile import dumps_state, loads_state
from qubitgeo.two_qubit import segre_embed, singlet


@pytest.fixture()
def ghz_file(tmp_path):
    path = tmp_path / "ghz.json"
    code = main(["construct", "ghz", "--output", str(path)])
    assert code == 0
    return path


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_construct_then_classify_ghz(capsys, ghz_file):
    code, report = _run(capsys, ["classify", str(ghz_file)])
    assert code == 0
    assert report["class"] == "GHZ"
    assert report["tau"] == pytest.approx(1.0)
    assert report["local_ranks"] == [2, 2, 2]
    assert report["memberships"]["symmetric_hyperplane"] is True
    assert report["memberships"]["twisted_cubic"] is False
    assert report["schema_version"] == 1


def test_classify_w_state(capsys, tmp_path):
    path = tmp_path / "w.json"
    assert main(["construct", "w", "--theta", "1.0", "--phi", "0.5",
                 "--output", str(path)]) == 0
    code, report = _run(capsys, ["classify", str(path)])
    assert code == 0
    assert report["class"] == "W"
    assert report["tau"] < 1e-10
    assert report["memberships"]["tangent_developable"] is True
    assert report["memberships"]["det_zero_quartic"] is True


def test_classify_separable_veronese(capsys, tmp_path):
    path = tmp_path / "v.json"
    assert main(["construct", "veronese", "--theta", "0.3", "--output", str(path)]) == 0
    code, report = _run(capsys, ["classify", str(path)])
    assert code == 0
    assert report["class"] == "Separable"
    assert report["memberships"]["fully_separable"] is True
    assert report["memberships"]["twisted_cubic"] is True


def test_classify_asym_line(capsys, tmp_path):
    path = tmp_path / "line.json"
    assert main(["construct", "asym-line", "--party", "2", "--output", str(path)]) == 0
    code, report = _run(capsys, ["classify", str(path)])
    assert code == 0
    assert report["class"] == "BisepB"
    assert report["local_ranks"] == [2, 1, 2]
    assert report["memberships"]["asymmetric_hyperplane"] is True


def test_construct_emitted_states_reparse(tmp_path):
    for name, extra in [
        ("singlet", []),
        ("triplet", ["--m", "-1", "--theta", "0.4"]),
        ("ghz", ["--theta", "2.0", "--phi", "1.0"]),
        ("w", []),
        ("veronese", ["--theta", "1.0"]),
        ("asym-line", ["--party", "3"]),
    ]:
        path = tmp_path / f"{name}.json"
        assert main(["construct", name, *extra, "--output", str(path)]) == 0
        psi = loads_state(path.read_text())
        assert abs(np.linalg.norm(psi) - 1.0) < 1e-12
        # serialization round trip preserves the ray exactly
        assert path.read_text() == dumps_state(psi) + "\n"


def test_distance_ghz_w(capsys, tmp_path, ghz_file):
    w_path = tmp_path / "w.json"
    assert main(["construct", "w", "--output", str(w_path)]) == 0
    code, report = _run(capsys, ["distance", str(ghz_file), str(w_path)])
    assert code == 0
    assert report["angle"] == pytest.approx(np.pi)
    assert report["transition_probability"] == pytest.approx(0.0, abs=1e-15)


def test_bloch_up_state(capsys, tmp_path):
    path = tmp_path / "up.json"
    path.write_text('{"qubits": 1, "amplitudes": [[1.0, 0.0], [0.0, 0.0]]}')
    code, report = _run(capsys, ["bloch", str(path)])
    assert code == 0
    assert report["bloch"] == [0.0, 0.0, 0.5]
    assert report["eigenvalues"] == [1.0, 0.0]


def test_factor_product_state(capsys, tmp_path):
    path = tmp_path / "prod.json"
    psi = segre_embed([1.0, 0.0], [0.0, 1.0])
    path.write_text(dumps_state(psi))
    code, report = _run(capsys, ["factor", str(path)])
    assert code == 0
    assert report["factor1"]["amplitudes"][0] == [1.0, 0.0]
    assert report["factor2"]["amplitudes"][1] == [1.0, 0.0]


def test_factor_refuses_singlet(capsys, tmp_path):
    path = tmp_path / "singlet.json"
    assert main(["construct", "singlet", "--output", str(path)]) == 0
    code = main(["factor", str(path)])
    err = capsys.readouterr().err
    assert code == 2
    assert "not a product state" in err


def test_orbit_check_ghz(capsys, ghz_file):
    code, report = _run(
        capsys, ["--seed", "5", "orbit-check", str(ghz_file), "--trials", "50"]
    )
    assert code == 0
    assert report["class_preserved"] is True
    assert report["preserved"] == 50
    assert report["det_rel_drift_max"] < 1e-9


def test_orbit_check_deterministic(capsys, ghz_file):
    code1, r1 = _run(capsys, ["--seed", "7", "orbit-check", str(ghz_file)])
    code2, r2 = _run(capsys, ["--seed", "7", "orbit-check", str(ghz_file)])
    assert code1 == code2 == 0
    assert r1 == r2


def test_random_command_round_trips(capsys):
    code, doc = _run(capsys, ["--seed", "3", "random", "--qubits", "2"])
    assert code == 0
    psi = loads_state(json.dumps(doc))
    assert psi.shape == (2, 2)
    code2, doc2 = _run(capsys, ["--seed", "3", "random", "--qubits", "2"])
    assert doc == doc2


def test_invariants_two_qubit(capsys, tmp_path):
    path = tmp_path / "singlet.json"
    assert main(["construct", "singlet", "--output", str(path)]) == 0
    code, report = _run(capsys, ["invariants", str(path)])
    assert code == 0
    assert report["qubits"] == 2
    assert report["concurrence"] == pytest.approx(1.0)
    assert report["on_product_quadric"] is False


def test_input_errors_exit_1(capsys, tmp_path, ghz_file):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert main(["classify", str(bad)]) == 1
    assert main(["classify", str(tmp_path / "missing.json")]) == 1
    assert main(["bloch", str(ghz_file)]) == 1  # wrong qubit count
    assert main(["construct", "nonsense"]) == 1  # unknown name
    assert main(["orbit-check", str(ghz_file), "--trials", "0"]) == 1
    capsys.readouterr()


def test_stdin_input(capsys, monkeypatch, tmp_path):
    import io

    doc = '{"qubits": 1, "amplitudes": [[0.6, 0.0], [0.0, 0.8]]}'
    monkeypatch.setattr("sys.stdin", io.StringIO(doc))
    code, report = _run(capsys, ["bloch", "-"])
    assert code == 0
    assert report["radius"] == pytest.approx(0.5)
