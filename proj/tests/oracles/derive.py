"""Reference values frozen into the C++ tests.

Everything here is evaluated from the defining formulas with numpy, on dense
uniform grids, without sharing code with the library. Run:

    python3 tests/oracles/derive.py

and copy the printed values into tests/unit/oracle_values.hpp.
"""

import math

import numpy as np

_trapezoid = getattr(np, "trapezoid", None) or np.trapz

# ---------------------------------------------------------------- closed forms


def sound_speed(t, s, z):
    return (1449.2 + 4.6 * t - 0.055 * t**2 + 0.00029 * t**3
            + (1.34 - 0.010 * t) * (s - 35) + 0.016 * z)


def absorption(f, t, s, zmax, ph, c):
    a1 = 8.696 / c * 10 ** (0.78 * ph - 5)
    f1 = 2.8 * math.sqrt(s / 35) * 10 ** (4 - 1245 / (t + 273))
    p1 = 1.0
    a2 = 21.44 * s / c * (1 + 0.025 * t)
    f2 = 8.17 * 10 ** (8 - 1990 / (t + 273)) / (1 + 0.0018 * (s - 35))
    p2 = 1 - 1.37e-4 * zmax + 6.2e-9 * zmax**2
    if t <= 20:
        a3 = 4.937e-4 - 2.59e-5 * t + 9.11e-7 * t**2 - 1.5e-8 * t**3
    else:
        a3 = 3.964e-4 - 1.146e-5 * t + 1.45e-7 * t**2 - 6.5e-10 * t**3
    p3 = 1 - 3.83e-5 * zmax + 4.9e-10 * zmax**2
    return (a1 * p1 * f1 * f**2 / (f1**2 + f**2)
            + a2 * p2 * f2 * f**2 / (f2**2 + f**2)
            + a3 * p3 * f**2)


def tl(d, alpha):
    dd = max(d, 1.0)
    return 40 * math.log10(dd) + (2 * dd - 1) * alpha / 1000


def noise_band(f, w, ship, band):
    lf = math.log10(f)
    turb = 17 - 30 * lf
    traffic = 40 + 20 * (ship - 0.5) + 26 * lf - 60 * math.log10(f + 0.03)
    ss = 50 + 5.38 * math.sqrt(w) + 20 * lf - 40 * math.log10(f + 0.4)
    therm = -15 + 20 * lf
    total = sum(10 ** (x / 10) for x in (turb, traffic, ss, therm))
    return 10 * math.log10(total) + 10 * math.log10(band), (turb, traffic, ss, therm)


def bottom_coeff(bt, g, f):
    cot2 = (math.cos(g) / math.sin(g)) ** 2
    gamma = 1 + 125 * math.exp(-2.64 * (bt - 1.75) ** 2 - 50 / bt * cot2)
    beta = gamma * (math.sin(g) + 0.19) ** (bt * math.cos(g) ** 16)
    return 10 * math.log10(3.03 * beta * f ** (3.2 - 0.8 * bt) * 10 ** (2.8 * bt - 12)
                           + 10 ** -4.42)


def surface_coeff(w, g, f):
    beta = 4 * (w + 2) / (w + 1) + (2.5 * (f + 0.1) ** (-1 / 3) - 4) * math.cos(g) ** 0.125
    return 10 * math.log10(10 ** -5.05 * (1 + w) ** 2 * (f + 0.1) ** (w / 150)
                           * math.tan(g) ** beta)


# ---------------------------------------------------------- scenario-1 model

T, S, DEPTH, ZMAX, PH, WIND, SP, BT = 10.0, 35.0, 7.0, 12.0, 8.0, 10.0, -90.0, 2.0
F_KHZ, BAND, FP, DB = 450.0, 50000.0, 15.0, 0.25
H, HD = 5.0, 7.0
C = sound_speed(T, S, DEPTH)
LAM = C / (F_KHZ * 1000)
HL, VL = 3.0, 2.0  # apertures in wavelengths
ALPHA = absorption(F_KHZ, T, S, ZMAX, PH, C)
DELTA = C / (2 * BAND)
CELLS = max(1, int(math.floor(DB / DELTA + 1e-9)))
DMAX = C / (2 * FP)
NBINS = int(math.ceil(DMAX / DB - 1e-12))


def gain(vx, vy, vz):
    """(alpha beta)^2 with the ring-average angle convention, zero behind the aperture."""
    n = np.sqrt(vx * vx + vy * vy + vz * vz)
    a = np.sinc(vy / n * HL) * np.sinc(vz / n * VL)
    return np.where(vx > 0, a * a, 0.0)


def gain_volume(vx, vy, vz):
    """(alpha beta)^2 with the volume angle convention (psi = atan(v_z / v_x))."""
    th = np.arctan2(vy, vx)
    ps = np.arctan2(vz, vx)
    a = np.sinc(np.sin(th) * np.cos(ps) * HL) * np.sinc(np.sin(ps) * VL)
    return np.where(vx > 0, a * a, 0.0)


def ring_avg(rho, z, npts=200_000):
    t = -math.pi + (np.arange(npts) + 0.5) * (2 * math.pi / npts)
    g = gain(rho * np.cos(t), rho * np.sin(t), np.full_like(t, z))
    return float(np.mean(g * g))  # transmit and receive both forward


def plane_bins(dist, coeff_fn, npts):
    out = []
    for n in range(1, NBINS + 1):
        cells = []
        lo = (n - 1) * DB
        ln = DB / CELLS
        for k in range(CELLS):
            a = lo + k * ln
            b = n * DB if k == CELLS - 1 else a + ln
            if not dist < b:
                continue
            ra = math.sqrt(max(a * a - dist * dist, 0.0))
            rb = math.sqrt(b * b - dist * dist)
            area = math.pi * (rb * rb - ra * ra)
            graz = math.asin(min(1.0, 2 * dist / (a + b)))
            plane_z = dist if coeff_fn is bottom_fn else -dist
            bp = ring_avg(0.5 * (ra + rb), plane_z, npts)
            if bp <= 0:
                continue
            lvl = -tl(0.5 * (a + b), ALPHA) + 10 * math.log10(bp) + coeff_fn(graz) + 10 * math.log10(area)
            cells.append(10 ** (lvl / 10))
        out.append(10 * math.log10(sum(cells)) if cells else None)
    return out


def bottom_fn(g):
    return bottom_coeff(BT, g, F_KHZ)


def surface_fn(g):
    return surface_coeff(WIND, min(g, math.pi / 2 - 1e-6), F_KHZ)


def elevation_profile(nphi=8001, naz=8000):
    """cos(phi) * integral over azimuth of the two-way gain, phi = depression."""
    phi = np.linspace(-math.pi / 2, math.pi / 2, nphi)
    az = -math.pi + (np.arange(naz) + 0.5) * (2 * math.pi / naz)
    prof = np.empty(nphi)
    for i, p in enumerate(phi):
        g = gain_volume(math.cos(p) * np.cos(az), math.cos(p) * np.sin(az),
                        np.full_like(az, math.sin(p)))
        prof[i] = math.cos(p) * float(np.sum(g * g)) * (2 * math.pi / naz)
    return phi, prof


def sphere_avg(profile, max_dep, max_elev):
    phi, prof = profile
    lo, hi = -min(max_elev, math.pi / 2), min(max_dep, math.pi / 2)
    if not hi > lo:
        return 0.0
    fine = np.linspace(lo, hi, 400_001)
    vals = np.interp(fine, phi, prof)
    return float(_trapezoid(vals, fine)) / (4 * math.pi)


def gate(b, a, dist):
    mid = 0.5 * (a + b)
    return math.asin(min(1.0, 2 * dist / (a + b))) if dist < mid else math.pi / 2


def volume_bins(profile, bins):
    out = {}
    sv = SP + 7 * math.log10(F_KHZ)
    for n in bins:
        cells = []
        ln = DB / CELLS
        for k in range(CELLS):
            a = (n - 1) * DB + k * ln
            b = n * DB if k == CELLS - 1 else a + ln
            vol = 4 / 3 * math.pi * (b**3 - a**3)
            bp = sphere_avg(profile, gate(b, a, H), gate(b, a, HD))
            if bp <= 0:
                continue
            lvl = -tl(0.5 * (a + b), ALPHA) + 10 * math.log10(bp) + sv + 10 * math.log10(vol)
            cells.append(10 ** (lvl / 10))
        out[n] = 10 * math.log10(sum(cells)) if cells else None
    return out


def main():
    print("# closed forms")
    print(f"sound_speed(10,35,50)      = {sound_speed(10, 35, 50)!r}")
    c0 = sound_speed(10, 35, 0)
    print(f"absorption(100;10,35,zmax100,pH8,c(z=0)) = {absorption(100, 10, 35, 100, 8, c0)!r}")
    print(f"absorption(450;20,35,zmax100,pH8,c(z=0)) = "
          f"{absorption(450, 20, 35, 100, 8, sound_speed(20, 35, 0))!r}")
    a3_20 = 4.937e-4 - 2.59e-5 * 20 + 9.11e-7 * 400 - 1.5e-8 * 8000
    print(f"A3(T=20, low branch)       = {a3_20!r}")
    print(f"scenario c                 = {C!r}")
    print(f"scenario alpha             = {ALPHA!r}")
    print(f"TL(35, scenario alpha)     = {tl(35, ALPHA)!r}")
    print(f"first null theta (L_H=3 lambda) = {math.asin(1 / 3)!r}")
    nlb, parts = noise_band(450, 10, 0.5, 50000)
    print(f"NL_B(450,10kn,0.5,50k)     = {nlb!r}  parts {parts!r}")
    g_pi2 = 1 + 125 * math.exp(-2.64 * 0.25**2)
    print(f"gamma(bt=2, pi/2)          = {g_pi2!r}")
    print(f"S_B(2, pi/2, 450)          = {bottom_coeff(2, math.pi / 2, 450)!r}")
    print(f"S_B(2, 0.5, 450)           = {bottom_coeff(2, 0.5, 450)!r}")
    print(f"S_S(10, 0.3, 450)          = {surface_coeff(10, 0.3, 450)!r}")
    for w in (5, 10, 20):
        print(f"S_S({w}, 0.3, 450)          = {surface_coeff(w, 0.3, 450)!r}")
    print(f"ring_grazing(6,5,5)        = {math.asin(10 / 11)!r}")
    print(f"cells per bin              = {CELLS}, bins {NBINS}, dmax {DMAX!r}")

    print("# ring average, d = 10 m (bin 40), bottom plane")
    n = 40
    a, b = (n - 1) * DB, n * DB
    rho = 0.5 * (math.sqrt(b * b - H * H) + math.sqrt(a * a - H * H))
    print(f"ring_avg_db(bin40, 1e6 pts) = {10 * math.log10(ring_avg(rho, H, 1_000_000))!r}")

    profile = elevation_profile()
    print("# sphere average for bin 40 gate")
    dep, ele = gate(b, a, H), gate(b, a, HD)
    print(f"gate = ({dep!r}, {ele!r})")
    print(f"sphere_avg_db(bin40)       = {10 * math.log10(sphere_avg(profile, dep, ele))!r}")
    print(f"sphere_avg_db(open)        = {10 * math.log10(sphere_avg(profile, math.pi / 2, math.pi / 2))!r}")

    print("# bottom curve (bin: dB)")
    bottom = plane_bins(H, bottom_fn, 20_000)
    print("BOTTOM = {" + ", ".join(f"{{{i + 1}, {v:.6f}}}" for i, v in enumerate(bottom)
                                   if v is not None and (i + 1) % 6 == 3) + "}")
    surface = plane_bins(HD, surface_fn, 20_000)
    print("SURFACE = {" + ", ".join(f"{{{i + 1}, {v:.6f}}}" for i, v in enumerate(surface)
                                    if v is not None and (i + 1) % 6 == 5) + "}")
    vol = volume_bins(profile, [1, 5, 10, 20, 21, 29, 40, 80, 141, 199])
    print("VOLUME = {" + ", ".join(f"{{{k}, {v:.6f}}}" for k, v in vol.items()) + "}")


if __name__ == "__main__":
    main()
