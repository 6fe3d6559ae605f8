"""Acceptance criteria, one test per criterion (a criterion may have several parts).

Each test records PASS/FAIL into ``acceptance_results.RESULTS``; the conftest
prints one line per criterion at the end of the run.  Run standalone with
``python tests/test_acceptance.py``.
"""
import functools
import io
import json
import time
from fractions import Fraction
from math import comb, factorial

import pytest

from acceptance_results import RESULTS
from wreathfoulkes import chartable as ct
from wreathfoulkes import cli
from wreathfoulkes import coinvariant as co
from wreathfoulkes import combinatorics as cb
from wreathfoulkes import foulkes as fk
from wreathfoulkes import tensor as tn
from wreathfoulkes import wreath as wr
from wreathfoulkes.combinatorics import BoundaryConvention, Multipartition, multipartitions


def criterion(key, label, limit=None):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*a, **kw):
            t0 = time.perf_counter()
            ok = False
            try:
                fn(*a, **kw)
                elapsed = time.perf_counter() - t0
                if limit is not None:
                    assert elapsed < limit, f"took {elapsed:.1f}s, limit {limit}s"
                ok = True
            finally:
                RESULTS[key] = (ok, label, time.perf_counter() - t0)
        return run
    return wrap


def run_verify():
    out, err = io.StringIO(), io.StringIO()
    t0 = time.perf_counter()
    code = cli.run(["verify", "--r", "3", "--n", "4", "--suite", "all"], out, err)
    return code, json.loads(out.getvalue()), time.perf_counter() - t0


@functools.lru_cache(maxsize=None)
def full_report():
    return run_verify()


def entry(identity_prefix):
    _, rep, _ = full_report()
    hits = [e for e in rep["entries"] if e["identity"].startswith(identity_prefix)]
    assert len(hits) == 1, identity_prefix
    return hits[0]


@criterion("1", "Eulerian recurrence equals exhaustive descent counts", 30)
def test_c1_eulerian():
    cells = [(r, n) for r in (1, 2, 3) for n in range(0, 6)] + [(2, 6)]
    for r, n in cells:
        assert wr.eulerian_row(r, n) == wr.eulerian_bruteforce(r, n), (r, n)
    assert wr.eulerian_row(2, 2) == [1, 6, 1]


@criterion("2", "RSK bijective, descent preserving, worked example", 5)
def test_c2_rsk():
    for r, n in [(2, 3), (3, 3)]:
        pairs = set()
        for w in wr.elements(r, n):
            S, T = wr.rsk(w)
            assert wr.rsk_inverse(S, T) == w
            assert wr.descent_set(w) == cb.descent_set(T)
            pairs.add((S, T))
        assert len(pairs) == wr.group_order(r, n)
    S, T = wr.rsk(wr.ColoredPermutation.parse("3^0 2^0 1^0 4^2 6^2 5^1", 3))
    assert S.to_json() == [[[1], [2], [3]], [[5]], [[4, 6]]]
    assert T.to_json() == [[[1], [2], [3]], [[6]], [[4, 5]]]


@criterion("3", "character tables: orthogonality, degrees, branching", 60)
def test_c3_character_tables():
    for r in (1, 2, 3):
        for n in range(0, 5):
            table = ct.irreducible_table(r, n)
            assert ct.table_is_orthonormal(table) and ct.column_orthogonality_holds(table), (r, n)
            dims = [table[lam].at_identity() for lam in multipartitions(r, n)]
            assert dims == [cb.num_standard_tableaux(lam) for lam in multipartitions(r, n)]
            assert sum(d * d for d in dims) == r ** n * factorial(n)
            if n:
                for lam in multipartitions(r, n):
                    assert ct.restrict(table[lam]) == ct.branching_sum(lam), (r, n, lam)


@criterion("4", "tensor traces are (rk+1)^length", 30)
def test_c4_tensor_traces():
    for r in (1, 2, 3):
        for n in range(1, 4):
            for k in range(3):
                for mu in wr.classes(r, n):
                    w = wr.class_representative(mu)
                    expected = (r * k + 1) ** wr.length(w)
                    assert tn.unsigned_trace(w, k) == expected
                    assert tn.naive_trace(w, k, tn.ALL_EVEN) == expected


@criterion("5", "Foulkes characters: dimensions, regular sum, round trip, multiplicities, branching", 120)
def test_c5_foulkes_core():
    for r in (1, 2, 3):
        for n in range(1, 5):
            assert fk.properties_check(r, n)["ok"], (r, n)
            assert fk.foulkes_inverse_check(r, n)["ok"], (r, n)
            for k in range(n + 1):
                mult = fk.foulkes_multiplicities(r, n, k)
                assert mult == {lam: cb.m_count(lam, k) for lam in multipartitions(r, n)}
                assert min(mult.values()) >= 0
        for n in range(1, 6):
            assert fk.branching_check(r, n)["ok"], (r, n)


@criterion("6", "signed Foulkes(k) = Foulkes(n-k) under the complement boundary")
def test_c6_duality():
    for r in (1, 2, 3):
        for n in range(1, 5):
            for k in range(n + 1):
                assert fk.signed_foulkes_combinatorial(r, n, k, BoundaryConvention.COMPLEMENT) == \
                    fk.foulkes(r, n, n - k).to_class_function(), (r, n, k)


@criterion("7.a", "block coordinates of phi_k are indicator vectors")
def test_c7a_indicators():
    for r in (1, 2, 3):
        for n in range(1, 5):
            for k in range(n + 1):
                assert fk.block_coefficients(fk.foulkes(r, n, k)) == [int(j == k) for j in range(n + 1)]


@criterion("7.b", "(rq+1)^length is a block character iff q > n")
def test_c7b_block_threshold_q_gt_n():
    # exact coordinates are C(q+n-j, n) >= 0; all are non-negative already for q > n-1
    failures = []
    for r in (1, 2, 3):
        for n in range(1, 5):
            for q in (Fraction(3, 2), Fraction(5, 2), Fraction(2 * n + 1, 2)):
                got = fk.is_block_character(fk.chi_block(r, n, q))
                if got != (q > n):
                    failures.append((r, n, str(q), got))
    assert not failures, f"first counterexamples: {failures[:3]}"


@criterion("8.a", "s_k binomial transform holds; C(n+1,j) form flagged with its witness")
def test_c8a_sk_transform():
    for r in (1, 2):
        for n in range(1, 5):
            for lam in multipartitions(r, n):
                for k in range(4):
                    assert cb.binomial_transform_check(lam, k)["corrected_holds"], (lam, k)
    e = entry("s_k = sum_j C(n+1,j)")
    assert e["status"] == "MISMATCH-AS-PRINTED"
    assert {"r": 2, "n": 1, "lam": "[[1],[]]", "k": 2}.items() <= next(
        w for w in e["witness"]["first_per_r"] if w["r"] == 2).items()


@criterion("8.b", "c_k = sum_j C(n+j,j) mbar_(k-j)")
def test_c8b_ck_transform():
    failures = []
    for r in (1, 2):
        for n in range(1, 5):
            for lam in multipartitions(r, n):
                for k in range(4):
                    c = cb.column_semistandard_count(lam, k)
                    t = sum(comb(n + j, j) * cb.mbar_count(lam, k - j, BoundaryConvention.COMPLEMENT)
                            for j in range(k + 1))
                    if c != t:
                        failures.append((str(lam), k, c, t))
    assert not failures, f"{len(failures)} failures, first {failures[:3]}"


@criterion("9", "coinvariant basis rank, P_w = Q_w, filtration characters", 300)
def test_c9_coinvariant():
    variant = co.FlagVariant.INTERIOR_COLOR
    for r, n in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2)]:
        basis = co.descent_basis(r, n, variant, budget=10 ** 4)
        assert basis.rank == r ** n * factorial(n), (r, n)
    for r, n in [(1, 1), (1, 2), (1, 3), (2, 2)]:
        for mu in wr.classes(r, n):
            w = wr.class_representative(mu)
            assert co.graded_trace(w, variant) == co.tableau_side_trace(w, variant), (r, n, mu)
    for r, n in [(2, 2), (1, 1), (1, 2), (1, 3)]:
        rep = co.filtration_characters(r, n, variant, "des")
        assert rep["grouping"] is not None and rep["invariant"], (r, n)


@criterion("10", "documented findings reported as MISMATCH-AS-PRINTED with minimal witnesses")
def test_c10_findings():
    code, rep, _ = full_report()
    assert code == 0
    assert not [e for e in rep["entries"] if e["status"] == "FAIL"]
    expected_minimal = {
        "signed trace is (-1)^(n+r-1)": (2, 1),
        "Ewens normalizer (rq+1)": (1, 1),
        "s_k = sum_j C(n+1,j)": (1, 1),
        "m_k(lam) from a single removed box": (2, 1),
        "descent monomials with f_i = r des_i + (r-1) - c_i": (2, 1),
    }
    for prefix, rn in expected_minimal.items():
        e = entry(prefix)
        assert e["status"] == "MISMATCH-AS-PRINTED", prefix
        assert (e["witness"]["r"], e["witness"]["n"]) == rn, prefix


@criterion("11", "verify --suite all over r<=3, n<=4 in under 10 minutes", 600)
def test_c11_runtime():
    code, rep, secs = run_verify()
    assert code == 0 and secs < 600
    assert {e["suite"] for e in rep["entries"]} == set(rep["config"]["suites"])


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
