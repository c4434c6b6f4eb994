"""Matplotlib renderings of report data, written next to the main output.

All figures are plain bar charts of exact integer data; nothing here
feeds back into the certification.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def _new_axes(title: str):
    fig, ax = plt.subplots(figsize=(7, 4.2), dpi=120)
    ax.set_title(title, fontsize=12)
    ax.grid(axis="y", alpha=0.3, linewidth=0.6)
    ax.set_axisbelow(True)
    return fig, ax


def _save(fig, path: str) -> str:
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def save_length_distribution(tag: str, poincare_coeffs, path: str) -> str:
    """Bar chart of element counts per Coxeter length."""
    fig, ax = _new_axes(f"{tag}: Weyl elements by length")
    xs = list(range(len(poincare_coeffs)))
    ax.bar(xs, list(poincare_coeffs), color="#4878a8")
    ax.set_xlabel("length")
    ax.set_ylabel("elements")
    ax.set_xticks(xs)
    return _save(fig, path)


def save_invariant_dims(tag: str, dims, path: str) -> str:
    """Bar chart of graded invariant dimensions of the coinvariant algebra."""
    fig, ax = _new_axes(f"{tag}: graded invariants (real degree 2k)")
    xs = list(range(len(dims)))
    ax.bar(xs, list(dims), color="#5a9a68")
    ax.set_xlabel("lattice degree k")
    ax.set_ylabel("invariant dimension")
    ax.set_xticks(xs)
    ax.set_yticks(range(0, max(list(dims) + [1]) + 1))
    return _save(fig, path)


def save_compact_ranks(tag: str, tori_dict: dict, path: str) -> str:
    """Compact rank per involution class; the chi = 1 maximizer is marked."""
    classes = tori_dict["classes"]
    fig, ax = _new_axes(f"{tag}: torus classes (rk_c_G = {tori_dict['rk_c_G']})")
    xs = list(range(len(classes)))
    colors = ["#bd5d3a" if cls["chi"] else "#888888" for cls in classes]
    ax.bar(xs, [cls["rk_c"] for cls in classes], color=colors)
    for x, cls in zip(xs, classes):
        ax.annotate(
            f"chi={cls['chi']}",
            (x, cls["rk_c"]),
            ha="center",
            va="bottom",
            fontsize=9,
        )
    ax.set_xlabel("involution class (size below)")
    ax.set_ylabel("compact rank")
    ax.set_xticks(xs)
    ax.set_xticklabels([str(cls["size"]) for cls in classes])
    return _save(fig, path)


def render_report_figures(kind: str, tag: str, payload: dict, out_dir: str) -> list[str]:
    """Write the figures relevant to one report; returns the file paths."""
    os.makedirs(out_dir, exist_ok=True)
    written: list[str] = []

    def target(name: str) -> str:
        return os.path.join(out_dir, f"{tag}-{name}.png")

    if kind in ("verify", "weyl") and "poincare_poly" in _search(payload):
        written.append(
            save_length_distribution(tag, _search(payload)["poincare_poly"], target("lengths"))
        )
    if kind in ("verify", "coinv") and "invariant_dims" in _search(payload):
        written.append(
            save_invariant_dims(tag, _search(payload)["invariant_dims"], target("invariants"))
        )
    tori = payload.get("tori") if kind == "verify" else (payload if kind == "tori" else None)
    if tori and tori.get("classes"):
        written.append(save_compact_ranks(tag, tori, target("compact-ranks")))
    return written


def _search(payload: dict) -> dict:
    """Find the block holding polynomial data in nested report payloads."""
    if "poincare_poly" in payload or "invariant_dims" in payload:
        return payload
    inner = payload.get("cohomology")
    return inner if isinstance(inner, dict) else {}
