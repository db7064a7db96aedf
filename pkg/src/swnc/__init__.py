"""Sliding-window RLNC with an on-the-fly recoder and a slotted 2-hop simulator."""

from swnc.wire import CodingHeader, CodedPacket, FeedbackPacket
from swnc.codec import SourcePacket, Encoder, Decoder, ConsumeOutcome
from swnc.recoder import Recoder
from swnc.channel import ErasureChannel, DelayLine
from swnc.metrics import RunMetrics, combined_loss, theoretical_success_ratio
from swnc.protocols import ScenarioConfig, Scenario, run_scenario, pick_code_rate

__version__ = "0.1.0"

__all__ = [
    "CodingHeader",
    "CodedPacket",
    "FeedbackPacket",
    "SourcePacket",
    "Encoder",
    "Decoder",
    "ConsumeOutcome",
    "Recoder",
    "ErasureChannel",
    "DelayLine",
    "RunMetrics",
    "combined_loss",
    "theoretical_success_ratio",
    "ScenarioConfig",
    "Scenario",
    "run_scenario",
    "pick_code_rate",
]
