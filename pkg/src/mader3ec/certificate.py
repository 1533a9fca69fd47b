"""Certificates emitted by the certifiers and their line-oriented text form.

Text layout::

    MADER
    chain <id> : <edge id> <edge id> ...
    ...

or a single line ``CUT2 e1 e2`` / ``BRIDGE e`` / ``DISCONNECTED v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MADER = "MADER"
CUT2 = "CUT2"
BRIDGE = "BRIDGE"
DISCONNECTED = "DISCONNECTED"


class CertificateFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    """One of the four certificate variants.

    For ``MADER`` the ``paths`` hold ``(chain id, edge path)`` pairs in
    addition order; each edge path lists the chain's edges from its source
    to its target.
    """

    kind: str
    edges: tuple[int, ...] = ()
    vertex: int = -1
    paths: tuple[tuple[int, tuple[int, ...]], ...] = ()

    @classmethod
    def mader(cls, paths: Iterable[tuple[int, Sequence[int]]]) -> "Certificate":
        return cls(MADER, paths=tuple((cid, tuple(p)) for cid, p in paths))

    @classmethod
    def two_cut(cls, e1: int, e2: int) -> "Certificate":
        return cls(CUT2, edges=(e1, e2))

    @classmethod
    def bridge(cls, e: int) -> "Certificate":
        return cls(BRIDGE, edges=(e,))

    @classmethod
    def disconnected(cls, v: int) -> "Certificate":
        return cls(DISCONNECTED, vertex=v)

    @property
    def is_mader(self) -> bool:
        return self.kind == MADER

    @property
    def chain_order(self) -> list[int]:
        return [cid for cid, _ in self.paths]

    def to_text(self) -> str:
        if self.kind == MADER:
            lines = [MADER]
            for cid, path in self.paths:
                lines.append(f"chain {cid} : " + " ".join(map(str, path)))
            return "\n".join(lines) + "\n"
        if self.kind == DISCONNECTED:
            return f"{DISCONNECTED} {self.vertex}\n"
        return " ".join([self.kind, *map(str, self.edges)]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise CertificateFormatError("empty certificate")
        head = lines[0].split()
        try:
            if head[0] == MADER:
                if len(head) != 1:
                    raise CertificateFormatError("MADER header takes no arguments")
                paths = []
                for ln in lines[1:]:
                    left, sep, right = ln.partition(":")
                    words = left.split()
                    if not sep or len(words) != 2 or words[0] != "chain":
                        raise CertificateFormatError(f"bad chain line {ln!r}")
                    paths.append((int(words[1]), tuple(int(x) for x in right.split())))
                return cls.mader(paths)
            if len(lines) != 1:
                raise CertificateFormatError("cut certificates are a single line")
            if head[0] == CUT2 and len(head) == 3:
                return cls.two_cut(int(head[1]), int(head[2]))
            if head[0] == BRIDGE and len(head) == 2:
                return cls.bridge(int(head[1]))
            if head[0] == DISCONNECTED and len(head) == 2:
                return cls.disconnected(int(head[1]))
        except ValueError as exc:
            if isinstance(exc, CertificateFormatError):
                raise
            raise CertificateFormatError(f"non-integer field in {lines[0]!r}") from None
        raise CertificateFormatError(f"unrecognised certificate header {lines[0]!r}")
