"""Wire formats: 5-byte coding header, coefficient-in-payload packets, 4-byte feedback.

Header layout (big-endian multi-byte fields):
    byte 0      window_size        1..255
    bytes 1-2   window_opening     0..65535
    byte 3      coefficient_count  1..255
    byte 4      flags              bit7 = source FEC, bit6 = last FEC, bits 5..0 zero

A coded packet on the wire is header || coefficients || payload. The
coefficient vector is left-aligned at window_opening and zero-padded to
coefficient_count, which is constant for a flow, so the wire length of
every packet in a flow is identical.

Feedback is two big-endian u16 counters: fully decoded, partially decoded.
"""

import struct
import warnings
from dataclasses import dataclass

import numpy as np

HEADER_LEN = 5
FEEDBACK_LEN = 4

_SOURCE_FEC_BIT = 0x80
_LAST_FEC_BIT = 0x40


class WireError(ValueError):
    """Malformed or out-of-range wire data."""


class ReservedBitsWarning(UserWarning):
    """Nonzero reserved flag bits seen during a tolerant parse."""


@dataclass(frozen=True)
class CodingHeader:
    window_size: int
    window_opening: int
    coefficient_count: int
    source_fec: bool = False
    last_fec: bool = False

    @property
    def window_closing(self):
        # Derived, never stored on the wire.
        return self.window_opening + self.window_size - 1

    def validate(self):
        if not 1 <= self.window_size <= 255:
            raise WireError(f"window_size {self.window_size} outside 1..255")
        if not 0 <= self.window_opening <= 0xFFFF:
            raise WireError(f"window_opening {self.window_opening} outside 0..65535")
        if not 1 <= self.coefficient_count <= 255:
            raise WireError(f"coefficient_count {self.coefficient_count} outside 1..255")


@dataclass(frozen=True)
class CodedPacket:
    header: CodingHeader
    coefficients: bytes
    payload: bytes

    @property
    def is_repair(self):
        return self.header.last_fec


@dataclass(frozen=True)
class FeedbackPacket:
    fully_decoded: int
    partially_decoded: int


def encode_header(h: CodingHeader) -> bytes:
    h.validate()
    flags = (_SOURCE_FEC_BIT if h.source_fec else 0) | (_LAST_FEC_BIT if h.last_fec else 0)
    return struct.pack(">BHBB", h.window_size, h.window_opening, h.coefficient_count, flags)


def decode_header(buf: bytes, strict: bool = False) -> CodingHeader:
    if len(buf) < HEADER_LEN:
        raise WireError(f"header needs {HEADER_LEN} bytes, got {len(buf)}")
    ws, wo, cc, flags = struct.unpack(">BHBB", bytes(buf[:HEADER_LEN]))
    if flags & 0x3F:
        if strict:
            raise WireError(f"reserved flag bits set: {flags:#04x}")
        warnings.warn("reserved flag bits set, ignoring", ReservedBitsWarning, stacklevel=2)
    h = CodingHeader(
        window_size=ws,
        window_opening=wo,
        coefficient_count=cc,
        source_fec=bool(flags & _SOURCE_FEC_BIT),
        last_fec=bool(flags & _LAST_FEC_BIT),
    )
    h.validate()
    return h


def encode_packet(p: CodedPacket) -> bytes:
    if len(p.coefficients) != p.header.coefficient_count:
        raise WireError(
            f"{len(p.coefficients)} coefficients, header says {p.header.coefficient_count}"
        )
    if len(p.payload) == 0:
        raise WireError("empty payload")
    return encode_header(p.header) + bytes(p.coefficients) + bytes(p.payload)


def decode_packet(buf: bytes, payload_len: int | None = None, strict: bool = False) -> CodedPacket:
    h = decode_header(buf, strict=strict)
    body = bytes(buf[HEADER_LEN:])
    if len(body) < h.coefficient_count + 1:
        raise WireError("packet truncated")
    coeffs = body[: h.coefficient_count]
    payload = body[h.coefficient_count :]
    if payload_len is not None and len(payload) != payload_len:
        raise WireError(f"payload length {len(payload)}, expected {payload_len}")
    return CodedPacket(header=h, coefficients=coeffs, payload=payload)


def encode_feedback(f: FeedbackPacket) -> bytes:
    if not 0 <= f.fully_decoded <= 0xFFFF or not 0 <= f.partially_decoded <= 0xFFFF:
        raise WireError("feedback counter outside 0..65535")
    return struct.pack(">HH", f.fully_decoded, f.partially_decoded)


def decode_feedback(buf: bytes) -> FeedbackPacket:
    if len(buf) < FEEDBACK_LEN:
        raise WireError(f"feedback needs {FEEDBACK_LEN} bytes, got {len(buf)}")
    fully, partial = struct.unpack(">HH", bytes(buf[:FEEDBACK_LEN]))
    return FeedbackPacket(fully, partial)


def coefficients_array(p: CodedPacket) -> np.ndarray:
    return np.frombuffer(p.coefficients, dtype=np.uint8)


def payload_array(p: CodedPacket) -> np.ndarray:
    return np.frombuffer(p.payload, dtype=np.uint8)
