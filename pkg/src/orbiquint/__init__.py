"""Exact boundary arithmetic for the plane-quintic locus in genus 6.

Modules:
  orbiscroll  -- intersection theory on orbifold Hirzebruch scrolls
  resolve     -- Hirzebruch-Jung resolution and diagram blow-downs
  covergraphs -- admissible-cover dual-graph enumeration
  recillas    -- the tetragonal-trigonal permutation correspondence
  parity      -- theta-characteristic parity bookkeeping
  classify    -- table and boundary-divisor assembly
  cli         -- command-line front end
"""

__version__ = "0.1.0"

from . import classify, cli, covergraphs, orbiscroll, parity, recillas, resolve

__all__ = [
    "classify", "cli", "covergraphs", "orbiscroll", "parity", "recillas",
    "resolve", "__version__",
]
