"""Presentation layer for rrtkit benchmark artifacts.

This package never runs planners and never imports rrtkit: it consumes the
benchmark's file formats only — the results CSV and the summary JSON — and
turns them into matplotlib figures and markdown tables.
"""

from rrtplots.io import load_summaries, load_summary, parse_results_csv
from rrtplots.histograms import plot_histograms, save_histograms
from rrtplots.tables import render_tables

__all__ = [
    "load_summary",
    "load_summaries",
    "parse_results_csv",
    "plot_histograms",
    "save_histograms",
    "render_tables",
]

__version__ = "0.1.0"
