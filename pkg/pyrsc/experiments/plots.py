"""
Static SVG trend plots of experiment results.
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .runner import ExperimentResult  # noqa: E402

logger = logging.getLogger(__name__)


def plot_trend(
    result: ExperimentResult,
    label: str,
    output_path: Union[str, Path],
    title: Optional[str] = None,
) -> Path:
    """
    Plot success fraction and mean value of one measurement against n.

    Error bars are one sample sd; the dashed line marks the success bar.
    """
    output_path = Path(output_path)
    rows = result.summary(label)
    ns = [r.n for r in rows]

    fig, (ax_frac, ax_mean) = plt.subplots(1, 2, figsize=(10, 4))
    fractions = [r.success_fraction for r in rows]
    ax_frac.errorbar(ns, fractions, yerr=[r.success_sd for r in rows], fmt="o-", markersize=4)
    ax_frac.axhline(result.config.success_bar, linestyle="dashed", color="red")
    ax_frac.set_xlabel("n")
    ax_frac.set_ylabel("success fraction")
    ax_frac.set_ylim(-0.05, 1.05)

    ax_mean.errorbar(ns, [r.mean for r in rows], yerr=[r.sd for r in rows], fmt="s-", markersize=4)
    ax_mean.set_xlabel("n")
    ax_mean.set_ylabel(f"mean {label}")

    fig.suptitle(title or f"{result.config.name}: {label}")
    fig.tight_layout()
    fig.savefig(output_path, format="svg")
    plt.close(fig)
    logger.debug(f"Wrote trend plot {output_path}")
    return output_path


def plot_all(result: ExperimentResult, output_dir: Union[str, Path]) -> List[Path]:
    """One SVG per measurement, named after the experiment and the label."""
    output_dir = Path(output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    for m in result.config.measurements:
        safe = "".join(c if c.isalnum() else "_" for c in m.label).strip("_")
        paths.append(plot_trend(result, m.label, output_dir / f"{result.config.name}_{safe}.svg"))
    return paths
