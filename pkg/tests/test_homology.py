"""Exact homology: boundary matrices, ranks, Betti numbers over Q and F_p."""

import pytest

from morse_ensemble import (
    ParameterError,
    PreconditionError,
    betti,
    boundary_class_vanishes,
    boundary_matrix,
    boundary_simplex,
    cycle_graph,
    dunce_hat,
    from_facets,
    matrix_rank,
    reduced_betti,
    rp2_6,
    simplex,
    torus_7,
)


def test_boundary_matrix_single_edge():
    K = from_facets([(0, 1)])
    assert boundary_matrix(K, 1) == [[-1], [1]]


def test_boundary_matrix_out_of_range():
    K = simplex(2)
    with pytest.raises(ParameterError):
        boundary_matrix(K, 0)
    with pytest.raises(ParameterError):
        boundary_matrix(K, 3)


def test_boundary_squared_is_zero_on_solid_tetrahedron():
    K = simplex(3)
    for i in (2, 3):
        d_hi = boundary_matrix(K, i)
        d_lo = boundary_matrix(K, i - 1)
        rows, mid = len(d_lo), len(d_hi)
        cols = len(d_hi[0])
        prod = [
            [sum(d_lo[r][k] * d_hi[k][c] for k in range(mid)) for c in range(cols)]
            for r in range(rows)
        ]
        assert all(all(x == 0 for x in row) for row in prod)


def test_rank_of_cycle_boundary():
    assert matrix_rank(boundary_matrix(cycle_graph(3).to_complex(), 1)) == 2


def test_matrix_rank_fields():
    m = [[2, 0], [0, 1]]
    assert matrix_rank(m) == 2
    assert matrix_rank(m, field=2) == 1
    with pytest.raises(ParameterError):
        matrix_rank(m, field=4)


def test_betti_spheres():
    assert tuple(betti(boundary_simplex(2))[i] for i in range(2)) == (1, 1)
    b = betti(boundary_simplex(3))
    assert (b[0], b[1], b[2]) == (1, 0, 1)
    assert b[9] == 0  # out-of-range grades read as zero


def test_betti_solid_simplex_contractible():
    b = betti(simplex(3))
    assert (b[0], b[1], b[2], b[3]) == (1, 0, 0, 0)


def test_betti_torus():
    b = betti(torus_7())
    assert (b[0], b[1], b[2]) == (1, 2, 1)


def test_betti_projective_plane_field_dependence():
    rational = betti(rp2_6())
    assert (rational[0], rational[1], rational[2]) == (1, 0, 0)
    mod2 = betti(rp2_6(), field=2)
    assert (mod2[0], mod2[1], mod2[2]) == (1, 1, 1)
    mod3 = betti(rp2_6(), field=3)
    assert (mod3[0], mod3[1], mod3[2]) == (1, 0, 0)


def test_betti_dunce_hat_contractible():
    b = betti(dunce_hat())
    assert (b[0], b[1], b[2]) == (1, 0, 0)


def test_betti_sphere_field_independent():
    for field in (None, 2, 3, 5):
        b = betti(boundary_simplex(3), field=field)
        assert (b[0], b[1], b[2]) == (1, 0, 1)


def test_betti_counts_components():
    K = from_facets([(0, 1), (2, 3), (4,)])
    assert betti(K)[0] == 3


def test_reduced_betti():
    assert reduced_betti(simplex(2), 0) == 0
    assert reduced_betti(from_facets([(0,), (1,)]), 0) == 1
    assert reduced_betti(boundary_simplex(2), 1) == 1
    assert reduced_betti(torus_7(), 1) == 2


def test_boundary_class_vanishes():
    # Boundary of the missing triangle bounds in a disk but not in a circle.
    disk = from_facets([(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    assert boundary_class_vanishes(disk, (1, 2, 3))
    circle = boundary_simplex(2)
    assert not boundary_class_vanishes(circle, (0, 1, 2))
    with pytest.raises(PreconditionError):
        boundary_class_vanishes(simplex(2), (0, 1, 2))  # already present


def test_boundary_class_orientability_of_surfaces():
    # Torus: any top face bounds via the rest of the fundamental class.
    T = torus_7()
    sigma = next(s for s in T.facets() if len(s) == 3)
    assert boundary_class_vanishes(T.without_simplex(sigma), sigma)
    # Projective plane: only over characteristic two.
    R = rp2_6()
    tau = next(s for s in R.facets() if len(s) == 3)
    assert not boundary_class_vanishes(R.without_simplex(tau), tau)
    assert boundary_class_vanishes(R.without_simplex(tau), tau, field=2)
