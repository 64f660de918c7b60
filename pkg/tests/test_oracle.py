import numpy as np
import pytest

from conftest import flat_exact_evolution

from curvedirac.errors import BudgetError
from curvedirac.geometry import MetricModel, ScalarForm
from curvedirac.grid_spectral import SpinorField, make_grid
from curvedirac.harness import RunConfig, run_simulation
from curvedirac.krylov import KrylovOptions
from curvedirac.oracle import (
    build_dense_G,
    dense_cn_step,
    reference_run,
    refine_config,
    restrict_to_coarse,
)
from curvedirac.propagators import StepWorkspace, cn_operator_apply, cn_transport_step
from curvedirac.spinor_algebra import alpha_matrix

EXP1 = MetricModel("static1d", mass=1.0,
                   phi=ScalarForm("gauss", (1.0, 5e-3)),
                   psi=ScalarForm("gauss", (1.0, 1e-2)))


def test_dense_G_zero_dt_is_identity():
    g = make_grid(1, 5.0, 16)
    ws = StepWorkspace(EXP1, g, 0.0)
    assert np.array_equal(build_dense_G(ws), np.eye(32))


def test_dense_G_matches_matrix_free_1d(rng):
    g = make_grid(1, 5.0, 8)
    ws = StepWorkspace(MetricModel("flat", mass=0.0), g, 0.2)
    G = build_dense_G(ws)
    for _ in range(20):
        v = rng.standard_normal((2, 8)) + 1j * rng.standard_normal((2, 8))
        f = SpinorField(v, g)
        assert np.max(np.abs(G @ v.ravel() - cn_operator_apply(f, ws, +1).values.ravel())) < 1e-11


def test_dense_G_matches_matrix_free_2d(rng):
    m2 = MetricModel("static2d", mass=1.0, phi=ScalarForm("gauss", (1.0, 1e-2)),
                     psi=ScalarForm("gauss", (1.0, 5e-3)))
    g = make_grid(2, (5.0, 5.0), (8, 6))
    ws = StepWorkspace(m2, g, 1e-2)
    G = build_dense_G(ws)
    v = rng.standard_normal((2, 8, 6)) + 1j * rng.standard_normal((2, 8, 6))
    f = SpinorField(v, g)
    assert np.max(np.abs(G @ v.ravel() - cn_operator_apply(f, ws, +1).values.ravel())) < 1e-11


def test_dense_G_anti_hermitian_part_flat():
    # constant velocity: G - I inherits the exact anti-Hermitianity of [[d]]
    g = make_grid(1, 5.0, 16)
    ws = StepWorkspace(MetricModel("flat", mass=0.0), g, 0.1)
    G = build_dense_G(ws)
    K = G - np.eye(32)
    assert np.max(np.abs(K + K.conj().T)) < 1e-14


def test_dense_G_size_guard():
    g = make_grid(1, 5.0, 16384)
    ws = StepWorkspace(MetricModel("flat"), g, 0.1)
    with pytest.raises(BudgetError):
        build_dense_G(ws)


def test_dense_cn_step_zero_dt(rng):
    g = make_grid(1, 5.0, 16)
    ws = StepWorkspace(EXP1, g, 0.0)
    f = SpinorField(rng.standard_normal((2, 16)) + 1j * rng.standard_normal((2, 16)), g)
    out = dense_cn_step(f, ws)
    assert np.max(np.abs(out.values - f.values)) < 1e-13


def test_dense_vs_gmres_cross_check(rng):
    g = make_grid(1, 5.0, 32)
    ws = StepWorkspace(EXP1, g, 5e-4)
    x = g.axes[0]
    v = np.zeros((2, 32), dtype=np.complex128)
    v[0] = np.exp(-x ** 2 / 2 + 5j * x)
    f = SpinorField(v, g)
    d = dense_cn_step(f, ws)
    k = cn_transport_step(f, ws, KrylovOptions(tol=1e-10))
    assert np.linalg.norm(d.values - k.values) / np.linalg.norm(d.values) < 1e-9


def test_dense_cn_plane_wave_cayley():
    g = make_grid(1, np.pi, 16)
    dt = 0.1
    ws = StepWorkspace(MetricModel("flat", mass=0.0), g, dt)
    xi = 2.0
    u = np.array([1.0, -0.3 + 0.1j])
    wave = np.exp(1j * xi * g.axes[0])
    f = SpinorField(np.stack([u[0] * wave, u[1] * wave]), g)
    out = dense_cn_step(f, ws)
    s1 = alpha_matrix(1, 2)
    cay = np.linalg.solve(np.eye(2) + 1j * dt * xi / 2 * s1,
                          (np.eye(2) - 1j * dt * xi / 2 * s1) @ u)
    assert np.max(np.abs(out.values - cay[:, None] * wave)) < 1e-12


def test_dense_vs_matrix_free_agree_on_presets(rng):
    """Every shipped geometry at oracle size: dense LU and GMRES agree."""
    cases = [
        (MetricModel("flat", mass=1.0), 1, 5.0, 64),
        (EXP1, 1, 5.0, 64),
        (MetricModel("graphene", a0=0.4, k0=2.0, ell=5.0,
                     ax_pot=ScalarForm("linear", (5.0,)),
                     v_pot=ScalarForm("linear", (5.0,))), 1, 10.0, 64),
        (MetricModel("static2d", mass=1.0, phi=ScalarForm("gauss", (1.0, 1e-2)),
                     psi=ScalarForm("gauss", (1.0, 5e-3))), 2, (5.0, 5.0), (16, 16)),
    ]
    for model, d, a, N in cases:
        g = make_grid(d, a, N)
        ws = StepWorkspace(model, g, 1e-3)
        shape = (model.spinor_dim,) + g.shape
        f = SpinorField(rng.standard_normal(shape) + 1j * rng.standard_normal(shape), g)
        dd = dense_cn_step(f, ws)
        kk = cn_transport_step(f, ws, KrylovOptions(tol=1e-11))
        assert np.linalg.norm(dd.values - kk.values) < 1e-9 * np.linalg.norm(dd.values)


# ------------------------------------------------------------- reference runs


def test_refine_config_scaling():
    cfg = RunConfig(d=1, a=5.0, N=128, metric=EXP1, scheme="cn", dt=4e-3, T=0.1,
                    ic_kind="gaussian_wavepacket", ic_k0=3.0)
    r = refine_config(cfg, 4)
    assert r.N == (512,) and r.dt == pytest.approx(2.5e-4)
    with pytest.raises(ValueError):
        refine_config(cfg, 0)


def test_reference_run_refine_one_is_identical():
    cfg = RunConfig(d=1, a=5.0, N=64, metric=EXP1, scheme="cn", dt=5e-3, T=0.05,
                    ic_kind="gaussian_wavepacket", ic_k0=3.0)
    a = run_simulation(cfg)
    b = reference_run(cfg, refine=1)
    assert a.final.values.tobytes() == b.final.values.tobytes()
    assert [r.l2 for r in a.diagnostics] == [r.l2 for r in b.diagnostics]


def test_reference_run_budget_guard():
    cfg = RunConfig(d=1, a=5.0, N=1024, metric=EXP1, scheme="cn", dt=1e-4, T=1.0,
                    ic_kind="gaussian_wavepacket", ic_k0=3.0)
    with pytest.raises(BudgetError):
        reference_run(cfg, refine=8, budget=10_000_000)


def test_restriction_subsamples_nested_nodes(rng):
    fine = make_grid(1, 5.0, 96)
    coarse = make_grid(1, 5.0, 32)
    v = rng.standard_normal((2, 96)) + 1j * rng.standard_normal((2, 96))
    r = restrict_to_coarse(SpinorField(v, fine), coarse)
    assert np.array_equal(r.values, v[:, ::3])
    assert np.allclose(fine.axes[0][::3], coarse.axes[0])
    with pytest.raises(ValueError):
        restrict_to_coarse(SpinorField(v, fine), make_grid(1, 5.0, 36))


def test_reference_run_matches_analytic_flat_dispersion():
    from curvedirac.harness import initial_condition

    cfg = RunConfig(d=1, a=6.0, N=256, metric=MetricModel("flat", mass=1.0),
                    scheme="cn", dt=4e-4, T=0.1,
                    ic_kind="gaussian_wavepacket", ic_k0=3.0)
    ref = reference_run(cfg, refine=3)
    rcfg = refine_config(cfg, 3)
    f0 = initial_condition(rcfg, rcfg.grid())
    exact = flat_exact_evolution(f0, 1.0, 0.1)
    err = np.linalg.norm(ref.final.values - exact.values) / np.linalg.norm(exact.values)
    assert err < 1e-8
