"""Bregman power clustering with data-gravitation improvement.

Thin re-export of the compiled core: synthetic generators, divergences,
power-mean clustering, the neighbor-contraction improvement and its
(eta, K, d) parameter search, baseline clusterers, and partition metrics.
"""

from ._core import (
    __version__,
    agglomerative,
    ari,
    bregman,
    cluster,
    dbgsa_search,
    density_peak,
    generate,
    improve,
    load_csv,
    nmi,
    power_mean,
    preprocess,
)

__all__ = [
    "__version__",
    "agglomerative",
    "ari",
    "bregman",
    "cluster",
    "dbgsa_search",
    "density_peak",
    "generate",
    "improve",
    "load_csv",
    "nmi",
    "power_mean",
    "preprocess",
]
