"""Persistent cache for enumerated bases and differential matrices.

Layout: one file per entry under <root>/<engine version>/, so a version bump
invalidates everything at once.  The pruning-flag fingerprint is part of the
file name, and each file repeats version and query in a header that loads
verify.  Writes go to a temp file in the same directory followed by an
atomic rename; unreadable or mismatched entries are treated as absent.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .algebra import parse_element
from .enumeration import BidegreeBasis
from .grading import PrimeContext
from .linalg import MatrixFp, matrix_from_rows

ENGINE_VERSION = "0.1.0"

ENV_CACHE_DIR = "MAYSS_CACHE_DIR"

_MAGIC = "mayss-cache"


def default_cache_root() -> Path:
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "mayss"


def _fingerprint(flags) -> str:
    return "+".join(sorted(flags)) if flags else "none"


class ResultCache:
    """File-backed store keyed by (kind, p, s, t, weight, pruning flags)."""

    def __init__(self, root: Path | str):
        self.root = Path(root) / ENGINE_VERSION

    # -- paths and atomic IO ------------------------------------------------

    def _path(self, kind: str, p: int, s: int, t: int, u, fingerprint: str) -> Path:
        uu = "all" if u is None else str(u)
        return self.root / ("%s_p%d_s%d_t%d_u%s_%s.txt" % (kind, p, s, t, uu, fingerprint))

    def _write(self, path: Path, lines: list[str]) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=str(path.parent), prefix=".tmp-")
            with os.fdopen(fd, "w") as fh:
                fh.write("\n".join(lines) + "\n")
            os.replace(tmp, path)
        except OSError:
            pass  # a cache that cannot write is just a cache miss later

    def _read(self, path: Path, header: str) -> list[str] | None:
        try:
            lines = path.read_text().splitlines()
        except OSError:
            return None
        if len(lines) < 2 or lines[0] != "%s %s" % (_MAGIC, ENGINE_VERSION) or lines[1] != header:
            return None
        return lines[2:]

    # -- bases --------------------------------------------------------------

    def _basis_header(self, p: int, s: int, t: int, fingerprint: str) -> str:
        return "basis p=%d s=%d t=%d u=all prune=%s" % (p, s, t, fingerprint)

    def load_basis(self, ctx: PrimeContext, s: int, t: int, flags) -> BidegreeBasis | None:
        fp = _fingerprint(flags)
        body = self._read(self._path("basis", ctx.p, s, t, None, fp),
                          self._basis_header(ctx.p, s, t, fp))
        if body is None:
            return None
        monomials = []
        try:
            for line in body:
                if not line:
                    continue
                terms = parse_element(line, ctx).terms
                if len(terms) != 1:
                    return None
                (mon, coeff), = terms.items()
                if coeff != 1:
                    return None
                monomials.append(mon)
        except Exception:
            return None
        return BidegreeBasis(p=ctx.p, s=s, t=t, u=None, monomials=tuple(monomials),
                             universe_bound="deg <= %d, filt <= %d" % (t, s))

    def store_basis(self, basis: BidegreeBasis, flags) -> None:
        fp = _fingerprint(flags)
        lines = ["%s %s" % (_MAGIC, ENGINE_VERSION),
                 self._basis_header(basis.p, basis.s, basis.t, fp)]
        lines.extend(mon.render() or "1" for mon in basis.monomials)
        self._write(self._path("basis", basis.p, basis.s, basis.t, None, fp), lines)

    # -- matrices -----------------------------------------------------------

    def _matrix_header(self, p: int, s: int, t: int, u: int, fingerprint: str) -> str:
        return "d1mat p=%d s=%d t=%d u=%d prune=%s" % (p, s, t, u, fingerprint)

    def load_matrix(self, ctx: PrimeContext, s: int, t: int, u: int,
                    rows: int, cols: int, flags=()) -> MatrixFp | None:
        fp = _fingerprint(flags)
        body = self._read(self._path("d1mat", ctx.p, s, t, u, fp),
                          self._matrix_header(ctx.p, s, t, u, fp))
        if body is None:
            return None
        try:
            nrows, ncols = (int(v) for v in body[0].split())
            if nrows != rows or ncols != cols:
                return None
            data = [[int(v) for v in line.split()] for line in body[1:1 + nrows]]
            if any(len(r) != ncols for r in data):
                return None
            if nrows == 0:
                return MatrixFp(modulus=ctx.p, rows=0, cols=ncols, entries=())
            return matrix_from_rows(data, ctx.p, cols=ncols)
        except (ValueError, IndexError):
            return None

    def store_matrix(self, ctx: PrimeContext, s: int, t: int, u: int, m: MatrixFp,
                     flags=()) -> None:
        fp = _fingerprint(flags)
        lines = ["%s %s" % (_MAGIC, ENGINE_VERSION),
                 self._matrix_header(ctx.p, s, t, u, fp),
                 "%d %d" % (m.rows, m.cols)]
        lines.extend(" ".join(str(v) for v in m.row(r)) for r in range(m.rows))
        self._write(self._path("d1mat", ctx.p, s, t, u, fp), lines)
