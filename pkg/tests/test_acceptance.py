"""Acceptance criteria, one test and one PASS/FAIL line each.

Every comparison is exact (rational or F_p arithmetic); the only numeric
tolerances are the wall-time budgets, pinned below.  Run directly with
``python tests/test_acceptance.py`` for the lines alone; under pytest they
appear in the terminal summary.
"""

import io
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from hopfrob import Matrix, dual_bialgebra, op_cop  # noqa: E402
from hopfrob.bialg import check_bialgebra_axioms  # noqa: E402
from hopfrob.cli import run  # noqa: E402
from hopfrob.conv import solve_antipode  # noqa: E402
from hopfrob.exactla import invert  # noqa: E402
from hopfrob.frob import (  # noqa: E402
    antipode_from_fh,
    casimir_report,
    closed_structure_check,
    fh_system,
    gamma_lambda,
    integral_spaces,
    roundtrip_count,
    summingup_report,
    verify_cl_bijection,
    verify_coinv_bijection,
    verify_comodule_adjunction,
)
from hopfrob.hopfmod import (  # noqa: E402
    LEFT,
    RIGHT,
    augmented_part,
    build_b_hat,
    coinvariants,
    decide_left_hopf,
    decide_right_hopf,
    hopf_galois,
    nu_from_eta,
    regular_comodule,
    regular_module,
    sigma,
    sigma_inverse_formula,
    trivial_comodule,
    trivial_module,
    witness_suite,
)
from hopfrob.zoo import cyclic_group_table, symmetric_group_table  # noqa: E402

import oracle  # noqa: E402
from conftest import HOPF_NAMES, SUITE_SECONDS, record_acceptance, zoo_member  # noqa: E402

PER_EXAMPLE_SECONDS = 5.0
DATA = Path(__file__).resolve().parent.parent / "data"


def _check(cond, msg):
    if not cond:
        raise AssertionError(msg)


def _report(label, fn):
    try:
        detail = fn()
        record_acceptance(label, True, detail)
    except AssertionError as exc:
        record_acceptance(label, False, str(exc))
        raise


# -- 1 ----------------------------------------------------------------------


def zoo_positives():
    times = {}
    for name in HOPF_NAMES:
        start = time.perf_counter()
        B = zoo_member(name)
        _check(decide_right_hopf(B).is_hopf and decide_left_hopf(B).is_hopf, f"{name}: decider says no")
        sol = solve_antipode(B, "both")
        _check(sol is not None and sol.solution_space_dim == 0, f"{name}: antipode not unique")
        if name in ("C2", "C3", "S3"):
            table = symmetric_group_table(3)[0] if name == "S3" else cyclic_group_table(B.dim)
            inv = oracle.group_inverse_permutation(table)
            _check(all(sol.S.col_list(g) == B.e(inv[g]) for g in range(B.dim)),
                   f"{name}: S(e_g) != e_(g^-1)")
        M = build_b_hat(B)
        data = sigma(M)
        _check(data.invertible, f"{name}: sigma of B^ not invertible")
        _check(sigma_inverse_formula(M, sol.S) == invert(data.sigma), f"{name}: inverse formula differs")
        _check(set(integral_spaces(B).dims().values()) == {1}, f"{name}: integral dims")
        sys_ = fh_system(B)
        _check(bool(sys_) and casimir_report(B, sys_).passed, f"{name}: FH system")
        panel = summingup_report(B)
        _check(panel.consistent and all(r.verdict for r in panel.rows), f"{name}: panel not all YES")
        times[name] = time.perf_counter() - start
        _check(times[name] < PER_EXAMPLE_SECONDS, f"{name}: {times[name]:.2f}s over budget")
    return "max " + f"{max(times.values()):.2f}s (" + max(times, key=times.get) + f"), budget {PER_EXAMPLE_SECONDS}s"


def test_criterion_1_zoo_positives():
    _report("1 zoo positives", zoo_positives)


# -- 2 ----------------------------------------------------------------------


def zoo_negative():
    B = zoo_member("M2")
    _check(solve_antipode(B, "right") is None and solve_antipode(B, "left") is None,
           "an antipode was found")
    data = sigma(build_b_hat(B))
    _check((data.coinv.dim, data.bar.dim, data.rank) == (2, 1, 1),
           f"sigma dims/rank {(data.coinv.dim, data.bar.dim, data.rank)}")
    g = hopf_galois(B)
    _check(g.rank < 4, f"Galois rank {g.rank}")
    res = fh_system(B)
    _check(not res and res.reason == "degenerate form", f"fh: {res}")
    _check("[[1,0], [0,0]]" in res.certificate, f"G certificate: {res.certificate}")
    panel = summingup_report(B)
    _check(panel.consistent and not any(r.verdict for r in panel.rows), "panel not all NO")
    return f"sigma rank 1 from dim 2 to dim 1; Galois rank {g.rank}; {res}"


def test_criterion_2_zoo_negative():
    _report("2 zoo negative", zoo_negative)


# -- 3 ----------------------------------------------------------------------


def h4_values():
    H = oracle.sweedler()
    B = zoo_member("H4")
    (psi,) = oracle.right_integrals_on(H)
    ints = integral_spaces(B)
    sys_ = fh_system(B)
    S = solve_antipode(B).S
    pairs = {
        "left integral in B": (ints.left_in.vectors(), oracle.left_integrals_in(H), [[0, 0, 1, 1]]),
        "right integral on B": (ints.right_on.vectors(), [psi], [[0, 0, 1, 0]]),
        "psi": (list(sys_.psi), psi, [0, 0, 1, 0]),
        "T": (list(sys_.T), oracle.norm_T(H, psi), [0, 0, 1, -1]),
        "S(x)": (S.col_list(2), oracle.right_antipode(H)[2], [0, 0, 0, -1]),
        "form": (sys_.form.to_rows(), oracle.form(H, psi),
                 [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]]),
    }
    for key, (lib, orc, frozen) in pairs.items():
        _check(orc == frozen, f"oracle disagrees on {key}: {orc}")
        _check(lib == frozen, f"library disagrees on {key}: {lib}")
    return "int_l B = span{x+gx}, psi = x*, T = x-gx, S(x) = -gx, form rows match (library = oracle = frozen)"


def test_criterion_3_h4_values():
    _report("3 H4 hand-derived values", h4_values)


# -- 4 ----------------------------------------------------------------------


def structure_suite():
    count = 0
    for name in HOPF_NAMES:
        B = zoo_member(name)
        F = B.field
        for side in (RIGHT, LEFT):
            for M in witness_suite(B, side):
                c, a = coinvariants(M), augmented_part(M)
                _check(c.dim + a.dim == M.dim and c.intersection(a).dim == 0,
                       f"{name} {M.name}: decomposition fails")
                d = sigma(M)
                _check(d.inverse is not None, f"{name} {M.name}: sigma singular")
                _check(d.sigma @ d.inverse == Matrix.identity(F, d.bar.dim), f"{name} {M.name}")
                _check(d.inverse @ d.sigma == Matrix.identity(F, d.coinv.dim), f"{name} {M.name}")
                count += 1
    B = zoo_member("M2")
    broken = [M.name for side in (RIGHT, LEFT) for M in witness_suite(B, side)
              if not sigma(M).decomposition.passed]
    _check(broken, "idempotent monoid: no module violates the decomposition")
    return f"{count} Hopf modules decompose with exact sigma round trips; monoid violates on {', '.join(broken)}"


def test_criterion_4_structure_theorem_suite():
    _report("4 structure-theorem suite", structure_suite)


# -- 5 ----------------------------------------------------------------------


def bijection_suite():
    total = checks = 0
    for name in HOPF_NAMES:
        B = zoo_member(name)
        sys_ = fh_system(B)
        S = solve_antipode(B).S
        reps = []
        for M in witness_suite(B, max_dimV=2):
            for P in (regular_comodule(B), trivial_comodule(B)):
                reps.append(verify_comodule_adjunction(B, sys_, M, P))
            for d in (1, 2):
                reps.append(verify_coinv_bijection(B, sys_, S, M, d))
                reps.append(verify_cl_bijection(B, sys_, S, M, d))
            reps.append(gamma_lambda(B, sys_, S, M))
        R, K = regular_module(B), trivial_module(B)
        for M, N, P in [(R, R, R), (K, R, R), (R, K, R)]:
            reps.append(closed_structure_check(B, M, N, P))
        for r in reps:
            _check(r.passed, f"{name}: {r.title} fails")
        total += sum(roundtrip_count(r) for r in reps)
        checks += len(reps)
    _check(total >= 30, f"only {total} round-trip identities")
    return f"{checks} verifier runs, {total} exact round-trip identities"


def test_criterion_5_bijection_suite():
    _report("5 bijection-verifier suite", bijection_suite)


# -- 6 ----------------------------------------------------------------------


def agreement_oracles():
    for name in HOPF_NAMES + ("M2",):
        B = zoo_member(name)
        sys_ = fh_system(B)
        if sys_:
            _check(antipode_from_fh(B, sys_).S == solve_antipode(B).S, f"{name}: FH antipode differs")
        nu = nu_from_eta(B)
        left = solve_antipode(B, "left")
        _check((nu is None) == (left is None), f"{name}: nu exists iff left antipode exists")
        _check(nu is None or nu == left.S, f"{name}: nu != left antipode")
        _check(decide_left_hopf(B).is_hopf == decide_right_hopf(op_cop(B, True, True)).is_hopf,
               f"{name}: left decider != right decider of op-cop")
        items = {r.item: r.verdict for r in summingup_report(B).rows}
        _check(bool(fh_system(dual_bialgebra(B))) == items[7] == items[3],
               f"{name}: dual FH verdict / items 3, 7 disagree")
    return "FH antipode = solver, nu = left antipode, left = right(op-cop), fh(B*) = (7) = (3)"


def test_criterion_6_agreement_oracles():
    _report("6 agreement oracles", agreement_oracles)


# -- 7 ----------------------------------------------------------------------


def mutation_robustness():
    from test_bialg import single_entry_mutants

    counts = {}
    for name in ("C2", "H4"):
        n = 0
        for key, mutant in single_entry_mutants(zoo_member(name)):
            rep = check_bialgebra_axioms(mutant)
            if rep.passed:
                _check(not summingup_report(mutant).verdict, f"{name} {key} passes silently")
            else:
                _check(all(c.witness is not None for c in rep.failures()),
                       f"{name} {key}: failure without a witness")
            n += 1
        counts[name] = n
    _check(min(counts.values()) >= 20, f"too few mutations {counts}")
    return f"{counts['C2']} mutations of C2 and {counts['H4']} of H4, each caught with a witness"


def test_criterion_7_mutation_robustness():
    _report("7 mutation robustness", mutation_robustness)


# -- 8 ----------------------------------------------------------------------

COMMANDS = ["validate", "antipode", "sigma", "integrals", "fh", "frobenius", "galois", "report", "dual"]


def determinism():
    files = sorted(DATA.glob("*.json"))
    runs = 0
    for path in files:
        for cmd in COMMANDS:
            for extra in ([], ["--json"]):
                outs = []
                for _ in range(2):
                    out, err = io.StringIO(), io.StringIO()
                    code = run([cmd, str(path), *extra], out, err)
                    outs.append((code, out.getvalue(), err.getvalue()))
                _check(outs[0] == outs[1], f"{cmd} {path.name} {extra} differs between runs")
                runs += 1
    return f"{runs} command/file/format combinations bit-identical across runs; suite budget {SUITE_SECONDS:.0f}s checked at session end"


def test_criterion_8_determinism():
    _report("8 exactness and determinism", determinism)


if __name__ == "__main__":
    from conftest import ACCEPTANCE_LINES

    for label, fn in [
        ("1 zoo positives", zoo_positives),
        ("2 zoo negative", zoo_negative),
        ("3 H4 hand-derived values", h4_values),
        ("4 structure-theorem suite", structure_suite),
        ("5 bijection-verifier suite", bijection_suite),
        ("6 agreement oracles", agreement_oracles),
        ("7 mutation robustness", mutation_robustness),
        ("8 exactness and determinism", determinism),
    ]:
        try:
            _report(label, fn)
        except AssertionError:
            pass
    print("\n".join(ACCEPTANCE_LINES))
    sys.exit(0 if all(line.startswith("PASS") for line in ACCEPTANCE_LINES) else 1)
