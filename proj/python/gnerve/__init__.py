"""Nerves of monads on finite categories."""

import json

from ._gnerve import __version__, axioms, corpus_names, nerve_counts, run

__all__ = ["__version__", "axioms", "check", "corpus_names", "nerve_counts", "run"]


def check(*args):
    """Run a command with the machine report format; returns (exit code, report dict)."""
    rc, out, _ = run(["--format", "machine", *map(str, args)])
    return rc, json.loads(out)
