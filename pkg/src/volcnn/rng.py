"""Deterministic random number generation.

Every consumer of randomness (weight init, dropout, augmentation, splitting)
gets its own named stream derived from the run seed, so results do not depend
on the order in which subsystems happen to draw. Streams are backed by the
counter-based Philox generator, which guarantees identical sequences for
identical (seed, stream) across runs, platforms and thread counts.

Normal variates are produced by Box-Muller on top of the uniform stream
rather than numpy's ziggurat so the scalar sequence is pinned by this module
alone.
"""

import hashlib

import numpy as np

from .errors import ParameterError

_TWO_PI = 2.0 * np.pi


def stream_id(name: str) -> int:
    """Stable 64-bit stream id for a consumer name."""
    digest = hashlib.blake2b(name.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class Rng:
    """A single owned random stream.

    Parameters
    ----------
    seed : int
        64-bit run seed shared by all streams of one run.
    stream : int or str
        Stream id, or a consumer name hashed to one.
    """

    def __init__(self, seed: int, stream=0):
        if isinstance(stream, str):
            stream = stream_id(stream)
        self.seed = int(seed) & 0xFFFFFFFFFFFFFFFF
        self.stream = int(stream) & 0xFFFFFFFFFFFFFFFF
        self._gen = np.random.Generator(np.random.Philox(key=[self.seed, self.stream]))

    def derive(self, *parts) -> "Rng":
        """Child stream keyed by this stream plus the given name/index parts.

        Used for per-sample or per-epoch substreams whose output must not
        depend on scheduling order.
        """
        h = hashlib.blake2b(digest_size=8)
        h.update(self.stream.to_bytes(8, "little"))
        for part in parts:
            if isinstance(part, int):
                h.update(b"i" + part.to_bytes(8, "little", signed=True))
            else:
                h.update(b"s" + str(part).encode("utf-8"))
        return Rng(self.seed, int.from_bytes(h.digest(), "little"))

    # -- draws ------------------------------------------------------------

    def random(self, shape=None):
        """Uniform [0, 1) float64 draws."""
        return self._gen.random(shape)

    def uniform(self, low, high, shape=None):
        return low + (high - low) * self._gen.random(shape)

    def normal(self, shape, mean=0.0, std=1.0, dtype=np.float32):
        """Normal(mean, std^2) via Box-Muller on the uniform stream."""
        if std < 0:
            raise ParameterError(f"std must be >= 0, got {std}")
        shape = (shape,) if isinstance(shape, int) else tuple(shape)
        n = int(np.prod(shape)) if shape else 1
        m = (n + 1) // 2
        u1 = self._gen.random(m)
        u2 = self._gen.random(m)
        # 1 - u1 lies in (0, 1], keeping the log finite.
        r = np.sqrt(-2.0 * np.log1p(-u1))
        theta = _TWO_PI * u2
        z = np.concatenate([r * np.cos(theta), r * np.sin(theta)])[:n]
        out = mean + std * z
        return out.reshape(shape).astype(dtype, copy=False)

    def integers(self, low, high=None):
        """Single integer in [low, high) (or [0, low) when high is None)."""
        return int(self._gen.integers(low, high))

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)

    def shuffle(self, seq: list) -> None:
        self._gen.shuffle(seq)

    # -- state ------------------------------------------------------------

    def get_state(self) -> dict:
        """JSON-serializable snapshot of the underlying generator."""
        state = self._gen.bit_generator.state
        return {
            "seed": self.seed,
            "stream": self.stream,
            "counter": [int(v) for v in state["state"]["counter"]],
            "key": [int(v) for v in state["state"]["key"]],
            "buffer": [int(v) for v in state["buffer"]],
            "buffer_pos": int(state["buffer_pos"]),
            "has_uint32": int(state["has_uint32"]),
            "uinteger": int(state["uinteger"]),
        }

    @classmethod
    def from_state(cls, snapshot: dict) -> "Rng":
        rng = cls(snapshot["seed"], snapshot["stream"])
        state = rng._gen.bit_generator.state
        state["state"]["counter"] = np.array(snapshot["counter"], dtype=np.uint64)
        state["state"]["key"] = np.array(snapshot["key"], dtype=np.uint64)
        state["buffer"] = np.array(snapshot["buffer"], dtype=np.uint64)
        state["buffer_pos"] = snapshot["buffer_pos"]
        state["has_uint32"] = snapshot["has_uint32"]
        state["uinteger"] = snapshot["uinteger"]
        rng._gen.bit_generator.state = state
        return rng

    def __repr__(self):
        return f"Rng(seed={self.seed}, stream={self.stream:#x})"
