"""End-to-end checks of the command-line interface.

Each test drives main() with a real argument vector and inspects stdout,
stderr and the exit status, so the JSON schemas and the exit-code contract
stay pinned down.
"""

import json

import pytest

from torcosets.cli import main, _parse_fixed
from torcosets.cyclo import RootOfUnity
from torcosets.errors import ParseError

from conftest import CORPUS_SOURCES


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


class TestSolve:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "solve", "-f", "x + y - 1")
        assert code == 0
        assert "isolated points: 2" in out
        assert "(z6, z6^5)" in out and "(z6^5, z6)" in out

    def test_json_schema(self, capsys):
        code, obj, _ = run_json(capsys, "solve", "-f", "x + y - 1")
        assert code == 0
        assert sorted(obj) == ["cosets", "counts", "isolated"]
        assert obj["counts"] == {"j0": 2, "j1": 1 - 1}
        assert all(sorted(r) == ["num", "ord"] for p in obj["isolated"] for r in p)

    def test_coset_json(self, capsys):
        code, obj, _ = run_json(capsys, "solve", "-f", "x^2*y - 1")
        assert code == 0
        assert obj["counts"] == {"j0": 0, "j1": 1}
        assert obj["cosets"][0]["lattice"] == [[2, 1]]

    def test_parse_error_text(self, capsys):
        code, out, err = run(capsys, "solve", "-f", "x + @")
        assert code == 1
        assert out == ""
        assert err.startswith("error:")

    def test_parse_error_json(self, capsys):
        code, out, err = run(capsys, "solve", "-f", "x + @", "--json")
        assert code == 1
        obj = json.loads(out)
        assert obj["error"]["type"] == "parse-error"

    def test_depth_cap(self, capsys):
        code, _, err = run(capsys, "solve", "-f", "x+y-1", "--max-depth", "65")
        assert code == 1
        assert "64" in err

    def test_conductor_cap_flag(self, capsys):
        code, _, err = run(
            capsys, "solve", "-f", "x+y-1", "--max-conductor", "20000"
        )
        assert code == 1

    def test_usage_error_is_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["solve"])  # missing -f
        assert exc.value.code == 2

    def test_unknown_command_is_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["nonsense"])
        assert exc.value.code == 2


class TestOracle:
    def test_matches_hex_points(self, capsys):
        code, obj, _ = run_json(capsys, "oracle", "-f", "x + y - 1", "-M", "60")
        assert code == 0
        assert obj["max_order"] == 60
        assert len(obj["points"]) == 2

    def test_threads_agree_with_single(self, capsys):
        _, one, _ = run_json(capsys, "oracle", "-f", "x^2 + y^2 - 2", "-M", "40")
        _, four, _ = run_json(
            capsys, "oracle", "-f", "x^2 + y^2 - 2", "-M", "40", "--threads", "4"
        )
        assert one == four
        assert len(one["points"]) > 0

    def test_order_cap(self, capsys):
        code, _, err = run(capsys, "oracle", "-f", "x+y-1", "-M", "500")
        assert code == 1
        assert "240" in err

    def test_cap_cannot_be_raised(self, capsys):
        code, _, _ = run(
            capsys, "oracle", "-f", "x+y-1", "-M", "500", "--max-M", "1000"
        )
        assert code == 1


class TestLinsolve:
    def test_hex_pair(self, capsys):
        code, out, _ = run(
            capsys, "linsolve", "--fixed", "1*z5,1*z7", "-u", "2"
        )
        assert code == 0
        assert "solution cosets: 2" in out
        assert "(z10^7, z14^9)" in out

    def test_collapse(self, capsys):
        code, obj, _ = run_json(
            capsys, "linsolve", "--fixed", "1*z5,1*z7", "-u", "2", "--collapse"
        )
        assert code == 0
        assert len(obj["cosets"]) == 1

    def test_homogeneous_pair(self, capsys):
        code, obj, _ = run_json(capsys, "linsolve", "-u", "2")
        assert code == 0
        assert obj["cosets"][0]["lattice"] == [[1, -1]]

    def test_coeff_count_mismatch(self, capsys):
        code, _, err = run(
            capsys, "linsolve", "-u", "3", "--coeffs", "1,2"
        )
        assert code == 1
        assert "3 unknowns" in err


class TestFixedTermSyntax:
    def test_forms(self):
        got = _parse_fixed("1*z5, -2, z7^3, -z4, +3*z8^-1")
        assert got == [
            (1, RootOfUnity.make(1, 5)),
            (-2, RootOfUnity.one()),
            (1, RootOfUnity.make(3, 7)),
            (-1, RootOfUnity.make(1, 4)),
            (3, RootOfUnity.make(-1, 8)),
        ]

    def test_rejects_garbage(self):
        for bad in ["2*", "q5", "z", "*z5", "1**z5", ""]:
            with pytest.raises(ParseError):
                _parse_fixed(bad)


class TestFamily:
    def test_emit(self, capsys):
        code, obj, _ = run_json(capsys, "family", "--primes", "5,7", "-d", "3")
        assert code == 0
        assert obj["expected"] == 18
        assert obj["nvars"] == 2
        assert "x^3" in obj["poly"] and "y^3" in obj["poly"]

    def test_verify_ok(self, capsys):
        code, obj, _ = run_json(
            capsys, "family", "--primes", "5,7", "-d", "1", "--verify"
        )
        assert code == 0
        assert obj["status"] == "ok"
        assert obj["found"] == 2

    def test_per_variable_degrees(self, capsys):
        code, obj, _ = run_json(capsys, "family", "--primes", "5,7", "-d", "2,3")
        assert code == 0
        assert obj["expected"] == 12

    def test_bad_primes(self, capsys):
        code, _, err = run(capsys, "family", "--primes", "5,9")
        assert code == 1


class TestPolytope:
    def test_stats(self, capsys):
        code, out, _ = run(capsys, "polytope", "-f", "x^2*y + y^3 + 1", "--stats")
        assert code == 0
        assert "volume 3" in out
        assert "multidegree (2, 3)" in out

    def test_embed_schema(self, capsys):
        code, obj, _ = run_json(
            capsys, "polytope", "-f", "x^2*y + y^3 + 1", "--embed", "100"
        )
        assert code == 0
        assert sorted(obj) == ["M_l", "bound", "l", "tau_l", "verified"]
        assert obj["verified"] is True
        assert obj["l"] == 100

    def test_stats_and_embed_together(self, capsys):
        code, obj, _ = run_json(
            capsys, "polytope", "-f", "x + y + 1", "--stats", "--embed", "200"
        )
        assert code == 0
        assert sorted(obj) == ["embedding", "stats"]

    def test_degenerate(self, capsys):
        code, out, _ = run(capsys, "polytope", "-f", "x^2 - 1", "--embed", "50", "--json")
        assert code == 1
        assert json.loads(out)["error"]["type"] == "degenerate-input"


class TestBounds:
    def test_main_pair(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--set", "main", "-n", "2", "-d", "1", "--delta", "1"
        )
        assert code == 0
        assert "4356" in out

    def test_theta0_golden(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--set", "theta0",
            "-n", "2", "-k", "1", "-d", "1", "--delta0", "1",
        )
        assert code == 0
        assert out.strip().endswith("66")

    def test_volume_json(self, capsys):
        code, obj, _ = run_json(
            capsys, "bounds", "--set", "volume", "-n", "2", "-j", "0", "--vol", "1"
        )
        assert code == 0
        rep = obj["bounds"][0]
        assert rep["params"]["rational_factor"] == "278784"

    def test_competitors_csv(self, capsys):
        code, out, _ = run(
            capsys, "bounds", "--set", "competitors", "-n", "2",
            "--delta", "3", "--vol", "9/2", "--multidegree", "3,3", "--csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "name,value"
        names = {ln.split(",")[0] for ln in lines[1:]}
        assert {"schmidt", "ruppert", "beukers-smyth"} <= names
        ruppert = next(ln for ln in lines if ln.startswith("ruppert,"))
        assert ruppert == "ruppert,198"

    def test_missing_volume(self, capsys):
        code, _, _ = run(capsys, "bounds", "--set", "volume", "-n", "2")
        assert code == 1


class TestSmallCommands:
    def test_psi(self, capsys):
        assert run(capsys, "psi", "105")[:2] == (0, "11\n")

    def test_psi_json(self, capsys):
        code, obj, _ = run_json(capsys, "psi", "30")
        assert (code, obj) == (0, {"psi": 6})

    def test_conductors(self, capsys):
        assert run(capsys, "cjconductors", "3")[:2] == (0, "1 2 3 6\n")

    def test_conductors_reject_small(self, capsys):
        assert run(capsys, "cjconductors", "1")[0] == 1

    def test_minsums_text(self, capsys):
        code, out, _ = run(capsys, "minsums", "1,1,1")
        assert code == 0
        assert "1 + z3 + z3^2" in out

    def test_minsums_json_blocks(self, capsys):
        code, obj, _ = run_json(capsys, "minsums", "2,1,1")
        assert code == 0
        assert obj["sums"][0]["blocks"] == [[0, 1, 2]]


class TestCorpusRoundTrip:
    def test_every_corpus_source_parses_via_cli(self, capsys):
        for name, src in CORPUS_SOURCES.items():
            code, obj, _ = run_json(capsys, "solve", "-f", src)
            assert code == 0, name
            assert set(obj["counts"]) == {"j0", "j1"}, name
