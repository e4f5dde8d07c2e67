"""Exit criteria.  Each test records a PASS/FAIL line in the terminal summary."""
import io
import random
import time

from quasischur.cli import main
from quasischur.combinat import ZERO, compositions, partitions, raise_part, straighten, straighten_by_raises
from quasischur.expansions import (
    FExpansion,
    F_to_schur,
    SchurExpansion,
    expansion_poly,
    jacobi_trudi_poly,
    schur_expansion_to_F,
    schur_poly,
    schur_to_F,
)
from quasischur.tableaux import (
    ThetaUndefined,
    cancellation_pairing,
    descent_composition,
    enumerate_syt,
    is_superstandard,
    signed_sum,
    theta_trace,
)


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out, err), out.getvalue(), err.getvalue()


def all_partitions(max_n):
    return [p for n in range(max_n + 1) for p in partitions(n)]


def test_worked_example_4_1(criterion):
    criterion("worked example lambda=(4,1): conversion and cancellation, < 1 s")
    start = time.perf_counter()
    code, out, _ = cli("convert", "F[4,1]+F[3,2]+F[2,3]+F[1,4]")
    assert (code, out) == (0, "s[4,1]\n")
    assert F_to_schur(FExpansion({(4, 1): 1, (3, 2): 1, (2, 3): 1, (1, 4): 1})) == {(4, 1): 1}
    code, out, _ = cli("verify", "--shape", "4,1")
    assert code == 0
    assert "C=(2,3)  0  FIXED" in out
    assert "C=(1,4)  - s[3,2]" in out
    rep = cancellation_pairing((4, 1))
    by_comp = {e.composition: e.value for e in rep.entries}
    assert by_comp[(2, 3)] == ZERO
    assert by_comp[(1, 4)] == -straighten((3, 2))
    assert time.perf_counter() - start < 1.0


def test_schur_sum_telescopes(criterion):
    criterion("sum over SYT of s_C(T) equals s_lambda for all |lambda| <= 8, < 10 s")
    start = time.perf_counter()
    shapes = all_partitions(8)
    n_tableaux = 0
    for shape in shapes:
        tableaux = enumerate_syt(shape)
        n_tableaux += len(tableaux)
        total = signed_sum(straighten(descent_composition(T)) for T in tableaux)
        assert total == {shape: 1}, shape
    assert len(shapes) == 67 and n_tableaux == 1116
    assert time.perf_counter() - start < 10.0


def test_theta_involution(criterion):
    criterion("theta is a sign-reversing involution on every non-superstandard SYT, |lambda| <= 8, < 10 s")
    start = time.perf_counter()
    violations = []
    for shape in all_partitions(8):
        for T in enumerate_syt(shape):
            if is_superstandard(T):
                continue
            try:
                res = theta_trace(T)
                back = theta_trace(res.image).image if not res.is_fixed else T
            except ThetaUndefined:
                violations.append((T, "theta undefined"))
                continue
            U = res.image
            C, D = descent_composition(T), descent_composition(U)
            if back != T:
                violations.append((T, "not an involution"))
            if U.shape != T.shape:
                violations.append((T, "shape changed"))
            if D != raise_part(C, res.raise_index):
                violations.append((T, f"C(theta T) != C(T)^({res.raise_index})"))
            if straighten(D) != -straighten(C):
                violations.append((T, "signs do not cancel"))
            if res.is_fixed and straighten(C) != ZERO:
                violations.append((T, "nonzero fixed point"))
    elapsed = time.perf_counter() - start
    assert not violations, (
        f"{len(violations)} violations, first {violations[0][0]}: {violations[0][1]}")
    assert elapsed < 10.0


def test_two_run_count(criterion):
    criterion("two-run SYT of (l1, l2) number l1 - l2 + 1 for l1 <= 8")
    for l1 in range(1, 9):
        for l2 in range(1, l1 + 1):
            two = [T for T in enumerate_syt((l1, l2)) if len(descent_composition(T)) == 2]
            assert len(two) == l1 - l2 + 1, (l1, l2)


def test_oracle_equivalences(criterion):
    criterion("polynomial oracle (6 vars): F-expansion, straightening, raise chains, < 30 s")
    start = time.perf_counter()
    nvars = 6
    for shape in all_partitions(6):
        assert expansion_poly(schur_to_F(shape), nvars) == schur_poly(shape, nvars), shape
    checked = 0
    for n in range(1, 7):
        for L in compositions(n):
            value = straighten(L)
            jt = jacobi_trudi_poly(L, nvars)
            if value == ZERO:
                assert jt == 0, L
            else:
                assert jt == schur_poly(value.shape, nvars) * value.sign, L
            checked += 1
    assert checked == 63
    for n in range(10):
        for L in compositions(n):
            assert straighten(L) == straighten_by_raises(L), L
    assert time.perf_counter() - start < 30.0


def test_round_trip(criterion):
    criterion("F_to_schur recovers random Schur combinations, |mu| <= 8, 200 cases")
    rng = random.Random(20180325)
    shapes = [p for p in all_partitions(8) if p]
    for _ in range(200):
        k = rng.randint(1, 5)
        g = SchurExpansion({rng.choice(shapes): rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(k)})
        assert F_to_schur(schur_expansion_to_F(g)) == g


def test_symmetry_gate(criterion):
    criterion("convert --check-symmetric: F[1,2] exits 3, schur_to_F output exits 0")
    code, _, err = cli("convert", "--check-symmetric", "F[1,2]")
    assert code == 3 and "not symmetric" in err
    for shape in all_partitions(8):
        if not shape:
            continue
        text = str(schur_to_F(shape))
        code, out, _ = cli("convert", "--check-symmetric", text)
        assert (code, out) == (0, f"s[{','.join(map(str, shape))}]\n"), shape
    rng = random.Random(7)
    shapes = [p for p in all_partitions(6) if p]
    for _ in range(20):
        g = SchurExpansion({rng.choice(shapes): rng.randint(-4, 4) for _ in range(3)})
        code, out, _ = cli("convert", "--check-symmetric", str(schur_expansion_to_F(g)))
        assert (code, out) == (0, f"{g}\n")


def test_theta_cli_golden(criterion):
    criterion("theta CLI golden output for the three worked tableaux")
    cases = {
        "[[1,2,3,6,8,9],[4,5,7]]": "[[1,2,5,6,8,9],[3,4,7]], C=(2,4,3), i=2\n",
        "[[1,2,3,4,5],[6,7,9],[8]]": "[[1,2,3,4,5],[6,8,9],[7]], C=(5,1,3), i=3\n",
        "[[1,2,3,6],[4,5]]": "[[1,2,5,6],[3,4]], C=(2,4), i=2\n",
    }
    for tableau, golden in cases.items():
        assert cli("theta", "--tableau", tableau) == (0, golden, "")
