import json

import pytest

from symcurves.cli import (
    EXIT_OK,
    EXIT_PRECONDITION,
    EXIT_UNDETERMINED,
    ScanCache,
    build_parser,
    main,
    rat,
    unrat,
)
from fractions import Fraction


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rational_serialization_roundtrip():
    for q in (Fraction(3, 7), Fraction(-22, 5), Fraction(0), Fraction(10**40, 3)):
        assert unrat(rat(q)) == q


def test_quartic_command(capsys):
    code, out, _ = run(["quartic", "-4", "-3", "1", "--generator", "4,-16",
                        "--rank", "1", "--json"], capsys)
    assert code == EXIT_OK
    env = json.loads(out)
    assert env["payload"]["count"] == 12
    assert env["payload"]["index_bound"] <= 120
    assert env["payload"]["n_window"] >= 40
    pts = {(unrat(x), unrat(y)) for x, y in env["payload"]["points"]}
    assert (Fraction(0), Fraction(1)) in pts


def test_quartic_rank0_empty(capsys):
    code, out, _ = run(["quartic", "-4", "-6", "5", "--rank", "0", "--json"],
                       capsys)
    assert code == EXIT_OK
    env = json.loads(out)
    assert env["payload"]["count"] == 0


def test_quartic_degenerate_exit(capsys):
    code, _, err = run(["quartic", "1", "0", "1"], capsys)
    assert code == EXIT_PRECONDITION
    assert "degenerate" in err


def test_quartic_off_curve_generator(capsys):
    code, _, err = run(["quartic", "-4", "-3", "1", "--generator", "3,1"],
                       capsys)
    assert code == EXIT_PRECONDITION


def test_cheb_command(capsys):
    code, out, _ = run(["cheb", "20", "--json"], capsys)
    assert code == EXIT_OK
    env = json.loads(out)
    assert env["payload"]["count"] == 12
    assert env["payload"]["case"].startswith("4 | d")
    code, out, _ = run(["cheb", "9", "--json"], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["payload"]["count"] == 0


def test_cheb_conjectural_exit(capsys):
    code, out, _ = run(["cheb", "7", "--json"], capsys)
    assert code == EXIT_UNDETERMINED
    assert json.loads(out)["payload"]["status"] == "conjectural-evidence"


def test_cheb_precondition(capsys):
    code, _, err = run(["cheb", "2"], capsys)
    assert code == EXIT_PRECONDITION


def test_descent_command(capsys):
    code, out, _ = run(["descent", "73", "--json"], capsys)
    assert code == EXIT_OK
    env = json.loads(out)
    assert env["payload"]["root_number"]["W"] == -1
    assert env["payload"]["selmer_rank_bound"] <= 2


def test_local_command(capsys):
    code, out, _ = run(["local", "73", "--json"], capsys)
    assert code == EXIT_OK
    assert json.loads(out)["payload"]["everywhere_locally_solvable"] is True
    code, _, _ = run(["local", "5", "--json"], capsys)
    assert code == EXIT_UNDETERMINED


def test_heights_command(capsys):
    code, out, _ = run(["heights", "-4", "-3", "1", "--point", "4,-16",
                        "--json"], capsys)
    assert code == EXIT_OK
    env = json.loads(out)
    assert env["payload"]["canonical_height"] == pytest.approx(0.3587, abs=1e-3)


def test_orbit_command(capsys):
    code, out, _ = run(["orbit", "--alpha", "-1", "--beta", "0", "--json"],
                       capsys)
    assert code == EXIT_OK
    env = json.loads(out)
    assert env["payload"]["intersection"] == [{"num": "2", "den": "1"}]
    assert env["payload"]["exact"] is True


def test_hasse_scan_and_cache(tmp_path, capsys):
    cache = str(tmp_path)
    code, out1, _ = run(["hasse-scan", "3", "200", "--assume-parity",
                         "--cache-dir", cache, "--json"], capsys)
    assert code == EXIT_OK
    env1 = json.loads(out1)
    ps = [v["p"] for v in env1["payload"]["verdicts"]]
    assert ps == [73, 97, 193]
    v73 = env1["payload"]["verdicts"][0]
    assert v73["congruence_gate"] is True and v73["conditional_rank"] == 1
    v97 = env1["payload"]["verdicts"][1]
    assert v97["congruence_gate"] is False  # 97 = 1 mod 48

    # Second run must be served from the cache, payload-identical.
    code, out2, _ = run(["hasse-scan", "3", "200", "--assume-parity",
                         "--cache-dir", cache, "--json"], capsys)
    env2 = json.loads(out2)
    assert env1["payload"] == env2["payload"]


def test_cache_corruption_detected(tmp_path, capsys):
    cache = str(tmp_path)
    run(["hasse-scan", "3", "100", "--assume-parity", "--cache-dir", cache,
         "--json"], capsys)
    path = tmp_path / "hasse-scan.jsonl"
    lines = path.read_text().splitlines()
    # Corrupt the stored record without fixing the hash.
    entry = json.loads(lines[0])
    entry["record"]["selmer_bound"] = 99
    path.write_text(json.dumps(entry) + "\n")
    c = ScanCache(cache, "hasse-scan")
    assert c.get(json.loads(lines[0])["key"]) is None  # rejected, recomputed
    code, out, _ = run(["hasse-scan", "3", "100", "--assume-parity",
                        "--cache-dir", cache, "--json"], capsys)
    env = json.loads(out)
    assert env["payload"]["verdicts"][0]["selmer_bound"] != 99


def test_determinism_modulo_timestamp(capsys):
    _, out1, _ = run(["descent", "29", "--json"], capsys)
    _, out2, _ = run(["descent", "29", "--json"], capsys)
    e1, e2 = json.loads(out1), json.loads(out2)
    e1.pop("timestamp"), e2.pop("timestamp")
    assert e1 == e2


def test_parser_covers_all_subcommands():
    ap = build_parser()
    subparsers = ap._subparsers._group_actions[0].choices
    assert set(subparsers) == {"quartic", "cheb", "hasse-scan", "heights",
                               "descent", "local", "orbit"}
