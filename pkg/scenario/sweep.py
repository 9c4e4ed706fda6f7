import itertools
import logging
from typing import List, Optional, Sequence

from obs.run_trace import RunTrace, with_span

from .config import ConfigError, ScenarioConfig, apply_overrides
from .metrics import RunSummary
from .runner import run_scenario

logger = logging.getLogger(__name__)


def run_sweep(
    cfg: ScenarioConfig,
    cam_hz_list: Sequence[float],
    seeds: Sequence[int],
    loss_probs: Optional[Sequence[float]] = None,
    trace: Optional[RunTrace] = None,
) -> List[RunSummary]:
    """
    One run per (cam_hz, loss_prob, seed); each run builds its own kernel and
    RNG streams. Results come back sorted by (cam_hz, loss_prob, seed).
    """
    if not cam_hz_list:
        raise ConfigError("cam_hz: sweep needs at least one frequency")
    if not seeds:
        raise ConfigError("seed: sweep needs at least one seed")
    if loss_probs is None:
        loss_probs = [cfg.channel.loss_prob]

    # validate every grid point before spending time on any run
    variants = []
    for hz, loss, seed in itertools.product(sorted(set(cam_hz_list)), sorted(set(loss_probs)), sorted(set(seeds))):
        variants.append(apply_overrides(cfg, cam_hz=hz, seed=seed, **{"channel.loss_prob": loss}))

    summaries = []
    with with_span(trace, "run_sweep", input_data={"runs": len(variants)}) as span:
        for i, variant in enumerate(variants, 1):
            logger.info(
                "Sweep run %d/%d: %.1f Hz, loss %.3f, seed %d",
                i,
                len(variants),
                variant.cam_hz,
                variant.channel.loss_prob,
                variant.seed,
            )
            _, summary = run_scenario(variant, trace=trace)
            summaries.append(summary)
        span["output"] = {"runs": len(summaries)}
    return summaries
