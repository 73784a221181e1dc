"""Construction of the invariant vertical-translator families of Nil3.

Four families share the machinery here:

* tilted grim reapers, invariant under the translations L_{(u,0,cu)};
  graphs z = xy/2 + cx + gamma(y) over a slab of explicit width;
* the bowl solution, rotationally invariant entire graph z = phi(r);
* translating catenoids, rotationally invariant with a neck of radius
  f0 > 0 glued to two graphical arms;
* helicoidal translators with pitch c != 0, generated by an arc-length
  planar curve whose curvature is prescribed by the translator equation.

Plus the planar Euclidean grim reaper, the vertical-cylinder translator for
horizontal translation directions.

Every constructed ``ProfileCurve`` carries per-sample mean curvature,
translator residual and curvatures recomputed through the surface kernel,
so the ODE solutions are cross-checked against the geometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import ode
from .core import group_mul, Point, vertical_translation_field
from .surface import (
    GraphJet,
    PatchJet,
    gaussian_curvature,
    graph_shape,
    intrinsic_curvature,
    patch_shape,
    translator_residual,
)


# ---------------------------------------------------------------------------
# shared containers


@dataclass
class ProfileCurve:
    """A sampled generating curve with per-sample derived quantities."""

    family: str
    params: dict
    t: np.ndarray
    data: dict
    trajectories: list = field(default_factory=list)
    diagnostics: dict = field(default_factory=dict)

    @property
    def residual_sup(self) -> float:
        return float(np.max(np.abs(self.data["residual"])))


@dataclass
class Mesh:
    """Quad mesh swept from a profile curve by a one-parameter group."""

    vertices: np.ndarray  # (n, 3)
    faces: list  # 1-based quad index tuples
    scalars: dict  # per-vertex arrays, e.g. H / residual / K_gauss
    closed: bool
    shape: tuple  # (n_profile, n_sweep)


# ---------------------------------------------------------------------------
# tilted grim reapers


@dataclass(frozen=True)
class GrimReaperParams:
    lam: float
    c: float = 0.0

    def __post_init__(self):
        if self.lam <= 0:
            raise ValueError("lambda must be positive")
        if self.c < 0:
            raise ValueError("slope c must be non-negative (apply y -> -y for c < 0)")


@dataclass(frozen=True)
class SlabData:
    a_endpoint: float
    b_endpoint: float
    width: float


def slab(lam: float, c: float) -> SlabData:
    """Endpoints and width of the maximal slab of the tilted grim reaper."""
    s = math.sqrt(lam)
    t = math.asinh(s * c)
    a = math.sinh(t - 0.5 * math.pi * s) / s - c
    b = math.sinh(t + 0.5 * math.pi * s) / s - c
    width = 2.0 / s * math.sqrt(1.0 + lam * c * c) * math.sinh(0.5 * math.pi * s)
    return SlabData(a, b, width)


def grim_reaper_rhs(lam: float, c: float, y: float, gamma: float, gamma_p: float):
    """Right-hand side of the generating-curve ODE (state (gamma, gamma'))."""
    s = math.sqrt(lam)
    a = y + c
    gamma_pp = 1.0 / s + (s * gamma_p * gamma_p + lam * a * gamma_p) / (1.0 + lam * a * a)
    return gamma_p, gamma_pp


def grim_reaper_closed_form(lam: float, c: float, y: float) -> float:
    """Closed-form gamma'(y), defined on the open slab only."""
    sl = slab(lam, c)
    if not sl.a_endpoint < y < sl.b_endpoint:
        raise ValueError(f"y={y} outside the open slab ({sl.a_endpoint}, {sl.b_endpoint})")
    s = math.sqrt(lam)
    a = y + c
    theta = (math.asinh(s * a) - math.asinh(s * c)) / s
    return math.sqrt(a * a + 1.0 / lam) * math.tan(theta)


def grim_reaper_jet(lam: float, c: float, y: float, gamma: float, gamma_p: float) -> GraphJet:
    """Graph jet of z = xy/2 + cx + gamma(y) at (x, y) = (0, y)."""
    _, gamma_pp = grim_reaper_rhs(lam, c, y, gamma, gamma_p)
    return GraphJet(
        x=0.0, y=y, u=gamma,
        u_x=0.5 * y + c, u_y=gamma_p,
        u_xx=0.0, u_xy=0.5, u_yy=gamma_pp,
    )


def solve_grim_reaper(params: GrimReaperParams,
                      rtol: float = ode.DEFAULT_RTOL,
                      atol: float = ode.DEFAULT_ATOL,
                      derived: bool = True) -> ProfileCurve:
    """Integrate the generating curve in both directions until blow-up.

    With ``derived=False`` only gamma and gamma' are tabulated (no per-sample
    shape data), which keeps tight-tolerance runs fast.
    """
    lam, c = params.lam, params.c

    def rhs(y, state):
        return grim_reaper_rhs(lam, c, y, state[0], state[1])

    sl = slab(lam, c)
    span = sl.width
    trajs = []
    for t1 in (sl.b_endpoint + 0.2 * span, sl.a_endpoint - 0.2 * span):
        problem = ode.OdeProblem(rhs, (0.0, 0.0), (0.0, t1), rtol=rtol, atol=atol)
        trajs.append(ode.integrate(problem))

    up, down = trajs
    ys = np.concatenate([down.t[:0:-1], up.t])
    states = np.vstack([down.y[:0:-1], up.y])
    cols = {"gamma": states[:, 0].copy(), "gamma_prime": states[:, 1].copy()}
    if derived:
        vfield = vertical_translation_field(lam)
        for key in ("H", "residual", "K_gauss", "K_intrinsic"):
            cols[key] = np.empty(len(ys))
        for i, (y, (g, gp)) in enumerate(zip(ys, states)):
            jet = grim_reaper_jet(lam, c, y, g, gp)
            shape = graph_shape(lam, jet)
            cols["H"][i] = shape.H
            cols["residual"][i] = translator_residual(lam, shape, vfield)
            cols["K_gauss"][i] = gaussian_curvature(shape)
            cols["K_intrinsic"][i] = intrinsic_curvature(lam, jet, shape)
    diag = {
        "slab": sl,
        "a_numeric": float(down.t_end),
        "b_numeric": float(up.t_end),
        "termination": (down.termination, up.termination),
    }
    return ProfileCurve("grim", {"lam": lam, "c": c}, ys, cols, trajs, diag)


def grim_reaper_on_window(lam: float, c: float, y_max: float,
                          rtol: float = ode.DEFAULT_RTOL,
                          atol: float = ode.DEFAULT_ATOL):
    """Dense gamma and gamma' on [-y_max, y_max] (window must sit in the slab).

    Returns a callable y -> (gamma, gamma'); used by the large-lambda limits.
    """
    sl = slab(lam, c)
    if not (sl.a_endpoint < -y_max and y_max < sl.b_endpoint):
        raise ValueError("window exceeds the slab of definition")

    def rhs(y, state):
        return grim_reaper_rhs(lam, c, y, state[0], state[1])

    up = ode.integrate(ode.OdeProblem(rhs, (0.0, 0.0), (0.0, y_max), rtol=rtol, atol=atol))
    down = ode.integrate(ode.OdeProblem(rhs, (0.0, 0.0), (0.0, -y_max), rtol=rtol, atol=atol))

    def gamma(y):
        scalar = np.ndim(y) == 0
        y = np.atleast_1d(np.asarray(y, dtype=float))
        out = np.empty((len(y), 2))
        pos = y >= 0
        if np.any(pos):
            out[pos] = up(y[pos])
        if np.any(~pos):
            out[~pos] = down(y[~pos])
        return out[0] if scalar else out

    return gamma


# ---------------------------------------------------------------------------
# rotationally invariant translators


def rotational_rhs(lam: float, r: float, phi_p: float) -> float:
    """phi'' for the rotational graph z = phi(r); singular at r = 0."""
    if r <= 0:
        raise ValueError("rotational ODE is singular at r <= 0; use a series start")
    s = math.sqrt(lam)
    return 1.0 / s + 4.0 * phi_p / (r * (4.0 + lam * r * r)) * (
        s * r * phi_p - 1.0 - lam * phi_p * phi_p
    )


def radial_graph_jet(lam: float, r: float, phi: float, phi_p: float,
                     phi_pp: float | None = None) -> GraphJet:
    """Graph jet of z = phi(sqrt(x^2+y^2)) at (x, y) = (r, 0)."""
    if phi_pp is None:
        phi_pp = rotational_rhs(lam, r, phi_p)
    return GraphJet(
        x=r, y=0.0, u=phi,
        u_x=phi_p, u_y=0.0,
        u_xx=phi_pp, u_xy=0.0, u_yy=phi_p / r,
    )


def _radial_profile_columns(lam, rs, phis, psis):
    vfield = vertical_translation_field(lam)
    cols = {k: np.empty(len(rs)) for k in
            ("phi", "psi", "H", "residual", "K_gauss", "K_intrinsic")}
    for i, (r, p, q) in enumerate(zip(rs, phis, psis)):
        jet = radial_graph_jet(lam, r, p, q)
        shape = graph_shape(lam, jet)
        cols["phi"][i] = p
        cols["psi"][i] = q
        cols["H"][i] = shape.H
        cols["residual"][i] = translator_residual(lam, shape, vfield)
        cols["K_gauss"][i] = gaussian_curvature(shape)
        cols["K_intrinsic"][i] = intrinsic_curvature(lam, jet, shape)
    return cols


def solve_bowl(lam: float, r_max: float, n_samples: int = 1500,
               rtol: float = ode.DEFAULT_RTOL,
               atol: float = ode.DEFAULT_ATOL) -> ProfileCurve:
    """The entire rotational graph, regular at the axis via a series start."""
    if r_max <= 0:
        raise ValueError("r_max must be positive")
    delta, (phi0, psi0) = ode.series_start("bowl-origin", lam)

    def rhs(r, state):
        return state[1], rotational_rhs(lam, r, state[1])

    traj = ode.integrate(
        ode.OdeProblem(rhs, (phi0, psi0), (delta, r_max), rtol=rtol, atol=atol))
    rs = np.linspace(delta, r_max, n_samples)
    states = traj(rs)
    cols = _radial_profile_columns(lam, rs, states[:, 0], states[:, 1])
    return ProfileCurve("bowl", {"lam": lam, "r_max": r_max}, rs, cols, [traj],
                        {"termination": traj.termination})


def catenoid_neck_rhs(lam: float, f: float, f_p: float) -> float:
    """f'' of the neck profile (the surface (f(z)cos v2, f(z)sin v2, z))."""
    if f <= 0:
        raise ValueError("neck radius must stay positive")
    s = math.sqrt(lam)
    return 4.0 / (s * f * (4.0 + lam * f * f)) * (
        lam * s + s * f_p * f_p - f * f_p**3 - lam * f * f_p - 0.25 * lam * f**3 * f_p**3
    )


def catenoid_neck(lam: float, f0: float, z_max: float,
                  rtol: float = ode.DEFAULT_RTOL,
                  atol: float = ode.DEFAULT_ATOL):
    """Neck profile f on [-z_max, z_max]; returns callable z -> (f, f')."""
    if f0 <= 0:
        raise ValueError("f0 must be positive")
    delta, start = ode.series_start("catenoid-apex", lam, f0=f0)

    def rhs(z, state):
        return state[1], catenoid_neck_rhs(lam, state[0], state[1])

    up = ode.integrate(ode.OdeProblem(rhs, start, (delta, z_max), rtol=rtol, atol=atol))
    down_start = (start[0], -start[1])
    down = ode.integrate(ode.OdeProblem(rhs, down_start, (-delta, -z_max), rtol=rtol, atol=atol))

    s = math.sqrt(lam)
    fpp0 = 4.0 * lam / (f0 * (4.0 + lam * f0 * f0))
    fppp0 = -4.0 * lam / (s * (4.0 + lam * f0 * f0)) * fpp0

    def f(z):
        scalar = np.ndim(z) == 0
        z = np.atleast_1d(np.asarray(z, dtype=float))
        out = np.empty((len(z), 2))
        pos = z >= delta
        neg = z <= -delta
        mid = ~pos & ~neg
        if np.any(pos):
            out[pos] = up(z[pos])
        if np.any(neg):
            out[neg] = down(z[neg])
        if np.any(mid):
            # third-order Taylor at the apex; |z| < 1e-4 keeps the error ~1e-14
            zm = z[mid]
            out[mid, 0] = f0 + 0.5 * fpp0 * zm**2 + fppp0 * zm**3 / 6.0
            out[mid, 1] = fpp0 * zm + 0.5 * fppp0 * zm**2
        return out[0] if scalar else out

    return f, (up, down)


def neck_patch_jet(lam: float, z: float, f: float, f_p: float,
                   f_pp: float | None = None, v2: float = 0.0) -> PatchJet:
    """Patch jet of the revolution surface (f(v1)cos v2, f(v1)sin v2, v1)."""
    if f_pp is None:
        f_pp = catenoid_neck_rhs(lam, f, f_p)
    cv, sv = math.cos(v2), math.sin(v2)
    p = Point(f * cv, f * sv, z)
    v1 = (f_p * cv, f_p * sv, 1.0)
    w2 = (-f * sv, f * cv, -0.5 * f * f)
    d1 = (f_pp * cv, f_pp * sv, 0.0, -f_p * sv, f_p * cv, -f * f_p)
    d2 = (-f_p * sv, f_p * cv, 0.0, -f * cv, -f * sv, 0.0)
    return PatchJet(p, v1, w2, d1, d2)


def choose_gluing_offset(lam: float, f0: float, eps_cap: float = 0.1):
    """Largest eps <= eps_cap with f'' > 0 and f' strictly monotone on (0, 2*eps].

    The construction only needs some eps with these properties; they are
    validated on a fine grid of the neck solution.
    """
    f, _ = catenoid_neck(lam, f0, 2.0 * eps_cap)
    zs = np.linspace(1e-3, 2.0 * eps_cap, 400)
    vals = f(zs)
    fpp = np.array([catenoid_neck_rhs(lam, fv, fpv) for fv, fpv in vals])
    good = (fpp > 0) & (np.diff(vals[:, 1], prepend=vals[0, 1] - 1e-16) > 0)
    if not good[0]:
        raise RuntimeError("neck solution is not convex near the apex")
    bad = np.nonzero(~good)[0]
    z_ok = zs[-1] if len(bad) == 0 else zs[bad[0] - 1]
    return min(eps_cap, 0.5 * z_ok), f


def solve_catenoid(lam: float, f0: float, eps: float | None = None,
                   r_max: float = 200.0,
                   rtol: float = ode.DEFAULT_RTOL,
                   atol: float = ode.DEFAULT_ATOL) -> ProfileCurve:
    """Glue the neck solution to two graphical arms into the full curve.

    The neck is integrated on [-eps, eps]; at the junctions the arms solve the
    rotational graph ODE with matching conditions phi(c0) = +-eps,
    phi'(c0) = 1/c1 where c0 = f(+-eps), c1 = f'(+-eps).
    """
    if f0 <= 0:
        raise ValueError("f0 must be positive")
    if eps is None:
        eps, f = choose_gluing_offset(lam, f0)
    else:
        f, _ = catenoid_neck(lam, f0, 2.0 * eps)
    c0p, c1p = f(eps)
    c0m, c1m = f(-eps)
    if c1p == 0.0 or c1m == 0.0:
        raise RuntimeError("gluing slope vanished; retry with a larger eps")

    def rhs(r, state):
        return state[1], rotational_rhs(lam, r, state[1])

    arm_p = ode.integrate(
        ode.OdeProblem(rhs, (eps, 1.0 / c1p), (c0p, r_max), rtol=rtol, atol=atol))
    arm_m = ode.integrate(
        ode.OdeProblem(rhs, (-eps, 1.0 / c1m), (c0m, r_max), rtol=rtol, atol=atol))

    # sample the three pieces: lower arm (reversed), neck, upper arm
    n_arm, n_neck = 700, 201  # odd neck count puts a sample exactly at z = 0
    vfield = vertical_translation_field(lam)
    rows = []  # (r, z, H, residual, K_gauss, piece)
    for tag, arm in (("arm-", arm_m), ("arm+", arm_p)):
        rs = np.geomspace(arm.t[0], r_max, n_arm)
        states = arm(rs)
        for r, (phi, psi) in zip(rs, states):
            jet = radial_graph_jet(lam, r, phi, psi)
            shape = graph_shape(lam, jet)
            rows.append((r, phi, shape.H,
                         translator_residual(lam, shape, vfield),
                         gaussian_curvature(shape), tag))
    zs = np.linspace(-eps, eps, n_neck)
    for z in zs:
        fv, fpv = f(z)
        jet = neck_patch_jet(lam, z, fv, fpv)
        shape = patch_shape(lam, jet)
        rows.append((fv, z, shape.H,
                     translator_residual(lam, shape, vfield),
                     gaussian_curvature(shape), "neck"))
    # order along the curve: lower arm from large r down, neck bottom->top, upper arm up
    lower = sorted((r for r in rows if r[5] == "arm-"), key=lambda r: -r[0])
    neck = sorted((r for r in rows if r[5] == "neck"), key=lambda r: r[1])
    upper = sorted((r for r in rows if r[5] == "arm+"), key=lambda r: r[0])
    ordered = lower + neck + upper
    rr = np.array([row[0] for row in ordered])
    zz = np.array([row[1] for row in ordered])
    seg = np.hypot(np.diff(rr), np.diff(zz))
    s = np.concatenate([[0.0], np.cumsum(seg)])
    cols = {
        "r": rr,
        "z": zz,
        "H": np.array([row[2] for row in ordered]),
        "residual": np.array([row[3] for row in ordered]),
        "K_gauss": np.array([row[4] for row in ordered]),
    }
    diag = {
        "eps": eps,
        "junctions": {
            "upper": {"r": c0p, "z": eps, "neck_slope": 1.0 / c1p, "arm_slope": float(arm_p.y[0][1])},
            "lower": {"r": c0m, "z": -eps, "neck_slope": 1.0 / c1m, "arm_slope": float(arm_m.y[0][1])},
        },
        "min_radius": float(np.min(rr)),
    }
    return ProfileCurve("catenoid", {"lam": lam, "f0": f0, "r_max": r_max},
                        s, cols, [arm_m, arm_p], diag)


# ---------------------------------------------------------------------------
# helicoidal translators


@dataclass(frozen=True)
class HelicoidParams:
    lam: float
    pitch: float
    r0: float = 1.0

    def __post_init__(self):
        if self.lam <= 0:
            raise ValueError("lambda must be positive")
        if self.pitch == 0:
            raise ValueError("pitch must be nonzero (pitch 0 is the rotational case)")
        if self.r0 < 0:
            raise ValueError("seed distance r0 must be non-negative")


def helicoid_curvature(lam: float, c: float, tau: float, nu: float) -> float:
    """Prescribed curvature of the arc-length generating curve."""
    if c == 0:
        raise ValueError("pitch must be nonzero")
    s = math.sqrt(lam)
    r2 = tau * tau + nu * nu
    q = 4.0 * tau * tau + lam * (4.0 * c * c - 4.0 * c * tau * tau
                                 + tau**4 + tau * tau * nu * nu)
    num = (lam * s * c * nu * (4.0 * c - 2.0 * tau * tau - nu * nu)
           - 4.0 * s * c * nu - tau * q)
    den = s * c * (4.0 * r2 + lam * (2.0 * c - r2) ** 2)
    return num / den


def helicoid_rhs(lam: float, c: float, state):
    """State derivative for (gamma1, gamma2, theta) with theta the tangent angle."""
    g1, g2, th = state
    ct, st = math.cos(th), math.sin(th)
    tau = g1 * ct + g2 * st
    nu = -g1 * st + g2 * ct
    return ct, st, helicoid_curvature(lam, c, tau, nu)


def helicoid_patch_jet(lam: float, c: float, g1: float, g2: float, th: float,
                       v2: float = 0.0) -> PatchJet:
    """Patch jet of the helicoidal surface (e^{i v2} gamma(v1), c v2) at v2."""
    ct, st = math.cos(th), math.sin(th)
    tau = g1 * ct + g2 * st
    nu = -g1 * st + g2 * ct
    k = helicoid_curvature(lam, c, tau, nu)
    r2 = tau * tau + nu * nu
    cv, sv = math.cos(v2), math.sin(v2)
    x = g1 * cv - g2 * sv
    y = g1 * sv + g2 * cv
    x1 = ct * cv - st * sv
    y1 = ct * sv + st * cv
    g1pp, g2pp = -k * st, k * ct  # gamma'' = k N
    x11 = g1pp * cv - g2pp * sv
    y11 = g1pp * sv + g2pp * cv
    p = Point(x, y, c * v2)
    v1 = (x1, y1, 0.5 * nu)
    w2 = (-y, x, c - 0.5 * r2)
    d1 = (x11, y11, -0.5 * k * tau, -y1, x1, -tau)
    d2 = (-y1, x1, 0.0, -x, -y, 0.0)
    return PatchJet(p, v1, w2, d1, d2)


def solve_helicoid(params: HelicoidParams, s_span: float = 50.0,
                   n_samples: int = 4001,
                   rtol: float = ode.DEFAULT_RTOL,
                   atol: float = ode.DEFAULT_ATOL) -> ProfileCurve:
    """Integrate both arms from the seed (the point closest to the origin).

    Normalization: gamma(0) = (r0, 0) with tangent angle pi/2, so tau(0) = 0
    and the closest point lies on the positive x-axis.
    """
    lam, c, r0 = params.lam, params.pitch, params.r0

    def rhs(s, state):
        return helicoid_rhs(lam, c, state)

    y0 = (r0, 0.0, 0.5 * math.pi)
    fwd = ode.integrate(ode.OdeProblem(rhs, y0, (0.0, s_span), rtol=rtol, atol=atol))
    bwd = ode.integrate(ode.OdeProblem(rhs, y0, (0.0, -s_span), rtol=rtol, atol=atol))

    ss = np.linspace(-s_span, s_span, n_samples)
    states = np.empty((n_samples, 3))
    pos = ss >= 0
    states[pos] = fwd(ss[pos])
    states[~pos] = bwd(ss[~pos])

    vfield = vertical_translation_field(lam)
    cols = {k: np.empty(n_samples) for k in
            ("gamma1", "gamma2", "theta_t", "tau", "nu", "r2", "k",
             "H", "residual", "K_gauss")}
    for i, (g1, g2, th) in enumerate(states):
        ct, st = math.cos(th), math.sin(th)
        tau = g1 * ct + g2 * st
        nu = -g1 * st + g2 * ct
        cols["gamma1"][i] = g1
        cols["gamma2"][i] = g2
        cols["theta_t"][i] = th
        cols["tau"][i] = tau
        cols["nu"][i] = nu
        cols["r2"][i] = tau * tau + nu * nu
        cols["k"][i] = helicoid_curvature(lam, c, tau, nu)
        jet = helicoid_patch_jet(lam, c, g1, g2, th)
        shape = patch_shape(lam, jet)
        cols["H"][i] = shape.H
        cols["residual"][i] = translator_residual(lam, shape, vfield)
        cols["K_gauss"][i] = gaussian_curvature(shape)
    winding = np.unwrap(np.arctan2(cols["gamma2"], cols["gamma1"]))
    diag = {"winding": winding}
    return ProfileCurve(
        "helicoid", {"lam": lam, "pitch": c, "r0": r0, "s_span": s_span},
        ss, cols, [bwd, fwd], diag)


def helicoid_kprime_numerator(lam: float, c: float, tau: float, nu: float) -> float:
    """Numerator of k' at points where k vanishes; negative for |s| large."""
    s = math.sqrt(lam)
    return (-3.0 * lam * tau * tau * nu * nu
            - 4.0 * lam * s * c * tau * nu
            - 5.0 * lam * tau**4
            + 12.0 * (lam * c - 1.0) * tau * tau
            - 4.0 * lam * c * c)


# ---------------------------------------------------------------------------
# planar Euclidean grim reaper (vertical-cylinder translator)


def planar_grim_reaper(direction, n_samples: int = 2001,
                       margin: float = 0.01) -> ProfileCurve:
    """The Euclidean grim reaper translating along ``direction``.

    The base curve y = -log(cos x) (unit speed along (0, 1)) is scaled by the
    speed |direction| and rotated so it translates along the given direction;
    its vertical cylinder in Nil3 translates accordingly, independent of lam.
    """
    a1, a2 = float(direction[0]), float(direction[1])
    speed = math.hypot(a1, a2)
    if speed == 0:
        raise ValueError("direction must be nonzero")
    width = math.pi / speed
    xs = np.linspace(-0.5 * width + margin / speed, 0.5 * width - margin / speed,
                     n_samples)
    h = -np.log(np.cos(speed * xs)) / speed
    hp = np.tan(speed * xs)
    k = speed * np.cos(speed * xs)  # curvature h''/(1+h'^2)^{3/2} in closed form
    nu2 = np.cos(speed * xs)  # second component of the unit normal (-h',1)/w
    residual = k - speed * nu2
    # rotate so that (0, 1) maps to direction/|direction|
    u1, u2 = a1 / speed, a2 / speed
    px = u2 * xs - u1 * h
    py = u1 * xs + u2 * h
    cols = {
        "x": xs, "y": np.asarray(h),
        "px": px, "py": py,
        "curvature": np.asarray(k),
        "residual": np.asarray(residual),
    }
    return ProfileCurve("planar-grim", {"a1": a1, "a2": a2, "speed": speed},
                        xs, cols, [], {"width": width})


# ---------------------------------------------------------------------------
# swept surfaces


def _profile_points(profile: ProfileCurve):
    """Generating-curve points in Nil3 coordinates, plus per-sample scalars."""
    fam = profile.family
    d = profile.data
    if fam == "grim":
        pts = np.column_stack([np.zeros_like(profile.t), profile.t, d["gamma"]])
    elif fam == "bowl":
        pts = np.column_stack([profile.t, np.zeros_like(profile.t), d["phi"]])
    elif fam == "catenoid":
        pts = np.column_stack([d["r"], np.zeros_like(profile.t), d["z"]])
    elif fam == "helicoid":
        pts = np.column_stack([d["gamma1"], d["gamma2"], np.zeros_like(profile.t)])
    elif fam == "planar-grim":
        pts = np.column_stack([d["px"], d["py"], np.zeros_like(profile.t)])
    else:
        raise ValueError(f"unknown profile family {fam!r}")
    scalars = {}
    for key in ("H", "residual", "K_gauss", "K_intrinsic", "curvature"):
        if key in d:
            scalars[key] = d[key]
    return pts, scalars


_FAMILY_GROUP = {
    "grim": "translation",
    "bowl": "rotation",
    "catenoid": "rotation",
    "helicoid": "helicoidal",
    "planar-grim": "vertical",
}


def _adaptive_indices(profile: ProfileCurve, n: int):
    """Profile subsampling uniform in arc length + curvature weight."""
    pts, scalars = _profile_points(profile)
    seg = np.linalg.norm(np.diff(pts, axis=0), axis=1)
    weight = seg.copy()
    curv = None
    for key in ("K_gauss", "curvature"):
        if key in scalars:
            curv = np.abs(scalars[key])
            break
    if curv is not None:
        cmax = np.max(curv) or 1.0
        weight *= 1.0 + 4.0 * 0.5 * (curv[:-1] + curv[1:]) / cmax
    cum = np.concatenate([[0.0], np.cumsum(weight)])
    targets = np.linspace(0.0, cum[-1], n)
    idx = np.unique(np.searchsorted(cum, targets))
    idx[-1] = len(pts) - 1
    return np.unique(idx)


def sweep_surface(profile: ProfileCurve, group: str | None = None,
                  n_profile: int = 100, n_sweep: int = 60,
                  sweep_range: tuple | None = None,
                  max_vertices: int = 100_000) -> Mesh:
    """Sweep a profile curve by its one-parameter group into a quad mesh."""
    expected = _FAMILY_GROUP[profile.family]
    if group is None:
        group = expected
    if group != expected:
        raise ValueError(
            f"group {group!r} does not match family {profile.family!r} (expected {expected!r})")

    if n_profile * n_sweep > max_vertices:
        n_profile = max(2, max_vertices // n_sweep)
    pts, scalars = _profile_points(profile)
    idx = _adaptive_indices(profile, n_profile)
    pts = pts[idx]
    scalars = {k: v[idx] for k, v in scalars.items()}
    n_profile = len(pts)

    closed = False
    if group == "rotation":
        closed = True
        us = np.linspace(0.0, 2.0 * math.pi, n_sweep, endpoint=False)
    else:
        lo, hi = sweep_range if sweep_range is not None else (-5.0, 5.0)
        us = np.linspace(lo, hi, n_sweep)

    c = profile.params.get("c", profile.params.get("pitch", 0.0))
    verts = np.empty((n_profile * n_sweep, 3))
    for j, u in enumerate(us):
        if group == "translation":
            g = Point(u, 0.0, c * u)
            for i, (px, py, pz) in enumerate(pts):
                q = group_mul(g, Point(px, py, pz))
                verts[j * n_profile + i] = (q.x, q.y, q.z)
        elif group == "rotation":
            cu, su = math.cos(u), math.sin(u)
            block = np.column_stack([
                cu * pts[:, 0] - su * pts[:, 1],
                su * pts[:, 0] + cu * pts[:, 1],
                pts[:, 2],
            ])
            verts[j * n_profile:(j + 1) * n_profile] = block
        elif group == "helicoidal":
            cu, su = math.cos(u), math.sin(u)
            block = np.column_stack([
                cu * pts[:, 0] - su * pts[:, 1],
                su * pts[:, 0] + cu * pts[:, 1],
                pts[:, 2] + c * u,
            ])
            verts[j * n_profile:(j + 1) * n_profile] = block
        else:  # vertical translation of a cylinder profile
            block = pts.copy()
            block[:, 2] += u
            verts[j * n_profile:(j + 1) * n_profile] = block

    faces = []
    n_rings = n_sweep if closed else n_sweep - 1
    for j in range(n_rings):
        j2 = (j + 1) % n_sweep
        for i in range(n_profile - 1):
            faces.append((
                j * n_profile + i + 1,
                j * n_profile + i + 2,
                j2 * n_profile + i + 2,
                j2 * n_profile + i + 1,
            ))
    tiled = {k: np.tile(v, n_sweep) for k, v in scalars.items()}
    return Mesh(vertices=verts, faces=faces, scalars=tiled, closed=closed,
                shape=(n_profile, n_sweep))
