"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see the PASS lines.
All checks are exact integer arithmetic; the only tolerances are the
stated wall-clock budgets.
"""

import json
import random
import time
from functools import lru_cache

from chitorus import (
    CartanSpec,
    FieldDescriptor,
    GWElement,
    GaloisTorus,
    IntPolynomial,
    build_root_datum,
    compact_rank,
    decompose_torus,
    degrees,
    fake_degree_table,
    generate_weyl,
    graded_invariant_dims,
    gw_mul,
    invariants,
    is_unit,
    length_poly,
    tori_report,
)
from chitorus.cli import main
from coinvariant_oracle import coinvariant_quotient
from helpers import kernel_rank, random_involution

TYPES = [
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("B", 2),
    ("B", 3),
    ("C", 2),
    ("C", 3),
    ("D", 4),
    ("G", 2),
    ("F", 4),
]

ISOGENIES = ["sc", "adj"]


@lru_cache(maxsize=None)
def _data(series, rank, iso):
    datum = build_root_datum(CartanSpec(series, rank, iso))
    weyl = generate_weyl(datum)
    degs = degrees(datum, weyl)
    table = fake_degree_table(datum, weyl, degs)
    return datum, weyl, degs, table


def test_criterion_1_rank_reproduction():
    started = time.perf_counter()
    for series, rank in TYPES:
        per_type = time.perf_counter()
        for iso in ISOGENIES:
            datum, weyl, degs, _ = _data(series, rank, iso)
            dims = graded_invariant_dims(datum, weyl, degs)
            assert dims[0] == 1, (series, rank, iso, dims)
            assert all(d == 0 for d in dims[1:]), (series, rank, iso, dims)
            assert sum(dims) == 1
        elapsed = time.perf_counter() - per_type
        assert elapsed < 5.0, f"{series}{rank} took {elapsed:.1f}s"
    print(
        f"\n[PASS] criterion 1: rank chi = 1 with invariants [1,0,...,0] for "
        f"{len(TYPES)} types x both isogenies ({time.perf_counter() - started:.1f}s)"
    )


def test_criterion_2_regular_representation_certificate():
    checked = 0
    for series, rank in TYPES:
        for iso in ISOGENIES:
            _, weyl, _, table = _data(series, rank, iso)
            for k, poly in enumerate(table.polys):
                expected = weyl.order if k == 0 else 0
                assert poly(1) == expected, (series, rank, iso, k)
                checked += 1
    print(
        f"\n[PASS] criterion 2: P_w(1) = |W|.[w = id] for {checked} fake degrees, "
        f"all divisions exact"
    )


def test_criterion_3_brute_force_coinvariant_oracle():
    started = time.perf_counter()
    for series, rank in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
        datum, weyl, degs, table = _data(series, rank, "sc")
        dims, traces = coinvariant_quotient(
            [el.matrix for el in weyl.elements], weyl.longest_length
        )
        width = weyl.longest_length + 1
        assert dims == list(table.polys[0].padded(width)), (series, rank)
        for k, poly in enumerate(table.polys):
            assert [int(t) for t in traces[k]] == list(poly.padded(width)), (
                series,
                rank,
                k,
            )
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0, f"oracle sweep took {elapsed:.1f}s"
    print(
        f"\n[PASS] criterion 3: explicit quotient construction reproduces every "
        f"fake-degree coefficient for A1, A2, B2, G2 ({elapsed:.1f}s)"
    )


def test_criterion_4_poincare_identity():
    for series, rank in TYPES:
        for iso in ISOGENIES:
            _, weyl, degs, _ = _data(series, rank, iso)
            poincare = length_poly(weyl)
            product = IntPolynomial.one()
            expected_order = 1
            for d in degs:
                product = product * IntPolynomial.q_integer(d)
                expected_order *= d
            assert poincare == product, (series, rank, iso)
            assert poincare(1) == weyl.order == expected_order
    print(
        "\n[PASS] criterion 4: length polynomial equals the product of q-integers "
        "and |W| equals the degree product for all tested types"
    )


def test_criterion_5_signature_reproduction():
    started = time.perf_counter()
    for series, rank in TYPES:
        per_type = time.perf_counter()
        for iso in ISOGENIES:
            datum, weyl, _, _ = _data(series, rank, iso)
            report = tori_report(datum, weyl=weyl)
            assert report.total_chi == 1, (series, rank, iso)
            assert report.maximizer_count == 1, (series, rank, iso)
        elapsed = time.perf_counter() - per_type
        assert elapsed < 5.0, f"{series}{rank} tori took {elapsed:.1f}s"
    datum, weyl, _, _ = _data("A", 1, "sc")
    a1 = tori_report(datum, weyl=weyl)
    assert sorted(c.compact_rank for c in a1.classes) == [0, 1]
    datum, weyl, _, _ = _data("B", 2, "sc")
    b2 = tori_report(datum, weyl=weyl)
    assert sorted(c.compact_rank for c in b2.classes) == [0, 1, 1, 2]
    print(
        f"\n[PASS] criterion 5: total chi = 1 with a unique maximizer for all "
        f"types; A1 ranks {{0,1}}, B2 ranks {{0,1,1,2}} "
        f"({time.perf_counter() - started:.1f}s)"
    )


def test_criterion_6_torus_decomposition_properties():
    started = time.perf_counter()
    rng = random.Random(2024)
    per_rank = 200
    for n in range(1, 7):
        for _ in range(per_rank):
            tau, tau0, (s, a, c) = random_involution(rng, n, steps=10)
            torus = GaloisTorus(n=n, tau=tau)
            decomp = decompose_torus(torus)
            assert decomp.s + decomp.a + 2 * decomp.c == n
            assert (decomp.s, decomp.a, decomp.c) == (s, a, c)  # conjugation invariance
            plus = tuple(
                tuple(tau[r][col] + (1 if r == col else 0) for col in range(n))
                for r in range(n)
            )
            assert compact_rank(torus) == kernel_rank(plus)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"decomposition sweep took {elapsed:.1f}s"
    print(
        f"\n[PASS] criterion 6: s + a + 2c = n, conjugation invariance, and the "
        f"kernel-rank oracle agree on {per_rank} involutions per rank 1..6 "
        f"({elapsed:.1f}s)"
    )


def test_criterion_7_gw_ring_model():
    started = time.perf_counter()
    rc = FieldDescriptor.real_closed()
    one = GWElement.one(rc)
    eps = GWElement.form(rc, -1)
    assert gw_mul(eps, eps) == one

    units = set()
    for a in range(-3, 4):
        for b in range(-3, 4):
            el = a * one + b * eps
            if is_unit(el).unit:
                units.add((a, b))
            assert is_unit(el).unit == (gw_mul(el, el) == one)
    assert units == {(1, 0), (-1, 0), (0, 1), (0, -1)}

    rng = random.Random(777)
    for _ in range(1000):
        a = _random_rc(rng, rc)
        b = _random_rc(rng, rc)
        ia, ib = invariants(a), invariants(b)
        iprod = invariants(gw_mul(a, b))
        isum = invariants(a + b)
        assert iprod.rank == ia.rank * ib.rank
        assert isum.rank == ia.rank + ib.rank
        assert iprod.signatures[0] == ia.signatures[0] * ib.signatures[0]
        assert isum.signatures[0] == ia.signatures[0] + ib.signatures[0]
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"GW checks took {elapsed:.2f}s"
    print(
        f"\n[PASS] criterion 7: eps^2 = 1, units are exactly {{+-1, +-eps}}, and "
        f"rank/signature are ring homomorphisms on 1000 random pairs ({elapsed:.2f}s)"
    )


def _random_rc(rng, field):
    pos = [rng.choice([1, -1]) for _ in range(rng.randrange(4))]
    neg = [rng.choice([1, -1]) for _ in range(rng.randrange(3))]
    return GWElement(field, pos=pos, neg=neg)


def test_criterion_8_end_to_end_theorem(tmp_path):
    started = time.perf_counter()
    fields = ["alg-closed", "real-closed", "finite:5", "rational"]
    runs = 0
    for series, rank in TYPES:
        for field in fields:
            target = tmp_path / f"{series}{rank}-{field.replace(':', '')}.json"
            code = main(
                [
                    "verify",
                    "--series",
                    series,
                    "--rank",
                    str(rank),
                    "--field",
                    field,
                    "--out",
                    str(target),
                ]
            )
            assert code == 0, (series, rank, field)
            payload = json.loads(target.read_text())
            assert payload["is_unit"] is True, (series, rank, field)
            assert payload["rank_chi"] == 1
            if field in ("real-closed", "rational"):
                assert payload["sgn_chi"] == 1
            if field == "real-closed":
                assert payload["gw_element"]["pos"] == [1]
                assert payload["gw_element"]["neg"] == []
            runs += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 120.0, f"verification matrix took {elapsed:.1f}s"
    print(
        f"\n[PASS] criterion 8: verify reported a unit for all {runs} "
        f"(type, field) pairs with exit code 0 ({elapsed:.1f}s)"
    )
