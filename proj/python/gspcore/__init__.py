"""Exact checks for GSp_2n: endoscopy, Satake transforms, Kostant cohomology and
signed ordered partition identities. Rationals are exchanged as strings or
fractions.Fraction values."""

import json
from fractions import Fraction

from . import _gspcore

__all__ = [
    "elliptic_data",
    "cuspidal_levis",
    "d_G",
    "satake_phi",
    "satake_transfer",
    "kostant",
    "kostant_matches_oracle",
    "weyl_character",
    "check_cor_A4",
    "prop331_core",
    "cor_A2",
    "verify",
]


def _s(x):
    return str(Fraction(x))


def _ss(xs):
    return [_s(x) for x in xs]


def _f(pair):
    return tuple(Fraction(v) for v in pair)


elliptic_data = _gspcore.elliptic_data
cuspidal_levis = _gspcore.cuspidal_levis
d_G = _gspcore.d_G
satake_phi = _gspcore.satake_phi


def satake_transfer(n, a, K=()):
    return _gspcore.satake_transfer(n, a, list(K))


def kostant(n, S, c, e, direction="above"):
    return _gspcore.kostant(n, list(S), _s(c), _ss(e), direction)


def kostant_matches_oracle(n, S, c, e):
    return _gspcore.kostant_matches_oracle(n, list(S), _s(c), _ss(e))


def weyl_character(c, e, gamma):
    return Fraction(_gspcore.weyl_character(_s(c), _ss(e), _ss(gamma)))


def check_cor_A4(n, m, lam, iplus=0):
    return _f(_gspcore.check_cor_A4(n, m, _ss(lam), iplus))


def prop331_core(r, t, c, e, iplus=0):
    return _f(_gspcore.prop331_core(r, t, _s(c), _ss(e), iplus))


def cor_A2(lam):
    return _f(_gspcore.cor_A2(_ss(lam)))


def verify(suite="all", n_max=4, samples=100, seed=1, with_time=True):
    return json.loads(_gspcore.verify(suite, n_max, samples, seed, with_time))
