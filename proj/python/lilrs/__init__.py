"""Lifted interleaved linearized Reed-Solomon codes over the multishot operator channel.

Field elements are packed base-q integers (digit j has weight q**j). Messages
are lists of s coefficient lists, subspaces are dicts with ``ambient`` and
``rows`` (reduced echelon basis rows as digit strings).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Any, Iterable, Optional, Sequence

from . import _core
from ._core import clopper_pearson, gaussian_binomial, kappa

__all__ = ["Bounds", "Code", "clopper_pearson", "gaussian_binomial", "kappa"]


@dataclass(frozen=True)
class Bounds:
    strict: Optional[float]
    heuristic: Optional[float]


class Code:
    """A code plus an experiment setup, mirroring the CLI's YAML config."""

    def __init__(
        self,
        q: int = 3,
        m: int = 3,
        s: int = 1,
        shots: Sequence[int] = (1,),
        k: int = 1,
        *,
        gamma: Iterable[int] | int = 0,
        delta: Iterable[int] | int = 0,
        trials: int = 1000,
        seed: int = 1,
        decoder: str = "unique",
        workers: int = 1,
        **extra: Any,
    ) -> None:
        cfg = {
            "field": {"q": q, "m": m},
            "code": {"s": s, "shots": list(shots), "k": k},
            "channel": {"gamma": _as_list(gamma), "delta": _as_list(delta)},
            "trials": trials,
            "seed": seed,
            "decoder": decoder,
            "workers": workers,
            **extra,
        }
        # JSON is a YAML subset, so the C++ config parser reads it directly.
        self._session = _core.Session(json.dumps(cfg))

    @classmethod
    def from_yaml(cls, text_or_path: str) -> "Code":
        if os.path.exists(text_or_path):
            with open(text_or_path, encoding="utf-8") as fh:
                text_or_path = fh.read()
        self = cls.__new__(cls)
        self._session = _core.Session(text_or_path)
        return self

    @property
    def config(self) -> str:
        return self._session.config()

    def summary(self) -> dict:
        return json.loads(self._session.summary())

    def random_message(self, seed: int) -> list:
        return json.loads(self._session.random_message(seed))

    def message(self, index: int) -> list:
        return json.loads(self._session.message_from_index(index))

    def encode(self, message: list) -> dict:
        return json.loads(self._session.encode(json.dumps(message)))

    def transmit(self, message: list, gamma: int, delta: int, seed: int, dual: bool = False) -> dict:
        return json.loads(self._session.transmit(json.dumps(message), gamma, delta, seed, dual))

    def decode(self, received: list, decoder: str = "unique") -> dict:
        return json.loads(self._session.decode(json.dumps(received), decoder))

    def bounds(self, gamma: int, delta: int, decoder: str = "unique") -> Bounds:
        return Bounds(*self._session.bounds(gamma, delta, decoder))

    def simulate(self) -> list[dict]:
        return json.loads(self._session.simulate())

    def roundtrip(self) -> dict:
        return json.loads(self._session.roundtrip())

    def exhaustive(self) -> dict:
        return json.loads(self._session.exhaustive())


def _as_list(x: Iterable[int] | int) -> list[int]:
    return [x] if isinstance(x, int) else list(x)
