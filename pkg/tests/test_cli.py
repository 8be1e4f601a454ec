import csv
import io
import json
from fractions import Fraction

import pytest

from zeta3forms import bounds
from zeta3forms.cli import (
    EXIT_FAILS,
    EXIT_OK,
    EXIT_UNKNOWN,
    EXIT_USAGE,
    enclosure_decimal,
    fraction_places,
    fraction_sci,
    main,
)
from zeta3forms.exactnum import Enclosure

F = Fraction


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- decimal formatting -------------------------------------------------------


def test_fraction_sci_basic():
    assert fraction_sci(F(-12), 7) == "-1.200000e+01"
    assert fraction_sci(F(1, 3), 4) == "3.333e-01"
    assert fraction_sci(F(2, 3), 4) == "6.667e-01"
    assert fraction_sci(F(0), 5) == "0"
    assert fraction_sci(F(999999, 10**6), 3) == "1.00e+00"  # carry into next decade


def test_fraction_sci_directed_up():
    assert fraction_sci(F(1001, 10**6), 2, "up") == "1.1e-03"


def test_enclosure_decimal_certifies_precision():
    # width 0.1 around 1.25: exactly at the 2-digit ulp, so only 1 digit is
    # strictly below one unit in the last place
    assert enclosure_decimal(Enclosure(F("1.2"), F("1.3")), 7) == "1e+00"
    # width 0.09 < 0.1 certifies two digits
    assert enclosure_decimal(Enclosure(F("1.20"), F("1.29")), 7) == "1.2e+00"
    exact = Enclosure.point(F(1, 4))
    assert enclosure_decimal(exact, 4) == "2.500e-01"


def test_enclosure_decimal_error_field_when_uncertifiable():
    foggy = Enclosure(F(-5), F(9))  # width 14 around midpoint 2
    assert "±" in enclosure_decimal(foggy, 7)


def test_fraction_places():
    assert fraction_places(F("1.20205690315959428"), 10) == "1.2020569032"
    assert fraction_places(F(5, 4), 0) == "1"
    with pytest.raises(ValueError):
        fraction_places(F(-1), 3)


# -- form ----------------------------------------------------------------------


def test_form_n1_exact_line(capsys):
    code, out, _ = run_cli(capsys, "form", "--n", "1", "--quiet")
    assert code == EXIT_OK
    assert out == "alpha=-12 beta=10 A=-12 B=10 dn3=1\n"


def test_form_n2_rational_alpha(capsys):
    code, out, _ = run_cli(capsys, "form", "--n", "2", "--quiet")
    assert code == EXIT_OK
    assert out == "alpha=-351/2 beta=146 A=-1404 B=1168 dn3=8\n"


def test_form_json(capsys):
    code, out, _ = run_cli(capsys, "form", "--n", "2", "--json", "--quiet")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload == {"n": 2, "alpha": "-351/2", "beta": 146, "A": -1404, "B": 1168, "dn3": 8}


# -- verify ----------------------------------------------------------------------


def test_verify_five_rows_all_hold(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "5", "--digits", "20", "--quiet")
    lines = out.strip().splitlines()
    assert code == EXIT_OK
    assert len(lines) == 5
    assert all("bound=holds" in line and "ratio=holds" in line for line in lines)


def test_verify_unknown_after_cap_exits_3(capsys):
    # 1-digit request caps at 16 digits after four doublings, far too coarse
    # for large n, so those rows stay unknown
    code, out, _ = run_cli(capsys, "verify", "--n-max", "50", "--digits", "1", "--quiet")
    assert code == EXIT_UNKNOWN
    assert "bound=unknown" in out
    assert "n=1 bound=holds" in out  # small n still resolve


def test_verify_csv_round_trip(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n-max", "6", "--digits", "25", "--csv", "--quiet")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [row["n"] for row in rows] == [str(n) for n in range(1, 7)]
    for row in rows:
        n = int(row["n"])
        assert bounds.verify_form_bound(n, 25).status.value == row["bound_status"]
        assert bounds.verify_ratio_bound(n, 25).status.value == row["ratio_status"]


# -- zeta3 -----------------------------------------------------------------------


def test_zeta3_digits_output(capsys):
    code, out, _ = run_cli(capsys, "zeta3", "--digits", "15", "--quiet")
    assert code == EXIT_OK
    assert out == "1.202056903159594\n"


def test_zeta3_large_digit_output(capsys):
    # far beyond CPython's default int->str guard; first digits pinned to the
    # independently verified expansion
    code, out, _ = run_cli(capsys, "zeta3", "--digits", "5000", "--quiet")
    assert code == EXIT_OK
    value = out.strip()
    assert len(value) == 5002  # "1." + 5000 places
    assert value.startswith("1.2020569031595942853997381615114499907649862923404988817922")


def test_zeta3_methods_agree(capsys):
    outs = set()
    for method in ("direct", "accelerated", "cross"):
        code, out, _ = run_cli(capsys, "zeta3", "--digits", "11", "--method", method, "--quiet")
        assert code == EXIT_OK
        outs.add(out)
    assert len(outs) == 1


def test_zeta3_direct_infeasible_digits_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "zeta3", "--digits", "400", "--method", "direct", "--quiet")
    assert code == EXIT_USAGE
    assert "error" in err


# -- audit -----------------------------------------------------------------------


def test_audit_json_final_contradiction_fails(capsys):
    code, out, _ = run_cli(
        capsys, "audit", "--coeffs", "1,1", "--n", "1", "--digits", "30", "--json", "--quiet"
    )
    assert code == EXIT_FAILS
    payload = json.loads(out)
    steps = {step["id"]: step for step in payload["steps"]}
    assert steps["final_contradiction"]["numeric"] == "fails"
    assert payload["c0_positive"] is True
    assert payload["coeffs"] == [1, 1]


def test_audit_negative_coeffs_text(capsys):
    code, out, _ = run_cli(capsys, "audit", "--coeffs", "-6,5", "--n", "1", "--quiet")
    assert code == EXIT_FAILS
    assert "c0_positive=false" in out
    assert "weighted_sum: fails" in out
    assert "(unmet)" in out


def test_audit_invalid_vector_usage_error(capsys):
    code, _, err = run_cli(capsys, "audit", "--coeffs", "0,0", "--n", "1", "--quiet")
    assert code == EXIT_USAGE
    assert "error" in err


def test_audit_malformed_coeffs_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "audit", "--coeffs", "1,x", "--n", "1", "--quiet")
    assert exc.value.code == EXIT_USAGE


# -- decay ------------------------------------------------------------------------


def test_decay_csv_shape(capsys):
    code, out, _ = run_cli(capsys, "decay", "--n-max", "5", "--digits", "60", "--csv", "--quiet")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "d_n", "abs_form", "rhs_bound", "ratio", "T_n"]
    assert len(rows) == 6
    assert [row[0] for row in rows[1:]] == ["1", "2", "3", "4", "5"]
    assert rows[5][1] == "60"  # d_5


def test_decay_text_mode(capsys):
    code, out, _ = run_cli(capsys, "decay", "--n-max", "2", "--digits", "60", "--quiet")
    assert code == EXIT_OK
    assert out.splitlines()[0].startswith("n=1 d_n=1 abs_form=")


# -- plumbing ----------------------------------------------------------------------


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--n-max", "3", "--frobnicate"])
    assert exc.value.code == EXIT_USAGE


def test_missing_subcommand_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == EXIT_USAGE


def test_banner_suppression(capsys):
    _, _, err_loud = run_cli(capsys, "form", "--n", "1")
    _, _, err_quiet = run_cli(capsys, "form", "--n", "1", "--quiet")
    assert err_loud.startswith("[zeta3forms]")
    assert err_quiet == ""


def test_repeat_runs_byte_identical(capsys):
    first = run_cli(capsys, "verify", "--n-max", "4", "--digits", "20", "--csv", "--quiet")
    second = run_cli(capsys, "verify", "--n-max", "4", "--digits", "20", "--csv", "--quiet")
    assert first == second
