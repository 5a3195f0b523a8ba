"""Words in central quasigroups, finite quasigroups, reversible automata and
linear semisymmetric algebras."""

__version__ = "0.1.0"
