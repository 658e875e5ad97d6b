"""Exact q-expansions on the genus-zero groups Gamma_0(N)^+ and the JST
elimination algorithms expressing their Hauptmoduli through Eisenstein series."""

__version__ = "0.1.0"
