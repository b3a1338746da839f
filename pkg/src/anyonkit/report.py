"""Render check reports and S-matrices to CSV and matplotlib figures.

Used by the CLI's ``--figures`` option; matplotlib is imported lazily with the
Agg backend so headless runs never touch a display.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .mtc import CheckReport, SMatrix

__all__ = ['save_check_figures', 'save_smatrix_figures']

# residuals of exactly 0 still need a position on a log axis
_FLOOR = 1e-18


def _slug(name: str) -> str:
    return Path(name).name.replace(':', '_').replace(' ', '_')


def _pyplot():
    import matplotlib
    matplotlib.use('Agg')
    import matplotlib.pyplot as plt
    return plt


def save_check_figures(reports: dict[str, CheckReport], outdir, model_name: str,
                       tol: float) -> list[Path]:
    """Write ``<model>_residuals.csv`` and a log-scale residual bar chart."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    slug = _slug(model_name)
    names = list(reports)
    residuals = [reports[n].residual for n in names]

    csv_path = outdir / f'{slug}_residuals.csv'
    with csv_path.open('w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle)
        writer.writerow(['check', 'residual', 'passed'])
        for name in names:
            writer.writerow([name, repr(reports[name].residual), reports[name].passed])

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(6.0, 3.2))
    colors = ['tab:green' if reports[n].passed else 'tab:red' for n in names]
    ax.bar(names, [max(r, _FLOOR) for r in residuals], color=colors)
    ax.axhline(tol, color='k', linestyle='--', linewidth=0.8, label=f'tolerance {tol:g}')
    ax.set_yscale('log')
    ax.set_ylabel('residual')
    ax.set_title(f'coherence residuals: {slug}')
    ax.legend(loc='upper right', fontsize=8)
    fig.tight_layout()
    png_path = outdir / f'{slug}_residuals.png'
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]


def save_smatrix_figures(smat: SMatrix, labels: tuple[str, ...], outdir,
                         model_name: str) -> list[Path]:
    """Write ``<model>_smatrix.csv`` and a modulus/phase heatmap."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    slug = _slug(model_name)
    matrix = smat.matrix

    csv_path = outdir / f'{slug}_smatrix.csv'
    with csv_path.open('w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle)
        writer.writerow(['row', 'col', 're', 'im'])
        for i, row_label in enumerate(labels):
            for j, col_label in enumerate(labels):
                writer.writerow([row_label, col_label,
                                 repr(matrix[i, j].real), repr(matrix[i, j].imag)])

    plt = _pyplot()
    fig, axes = plt.subplots(1, 2, figsize=(7.0, 3.2))
    for ax, data, title in ((axes[0], np.abs(matrix), 'modulus'),
                            (axes[1], np.angle(matrix), 'phase')):
        image = ax.imshow(data, cmap='viridis')
        ax.set_xticks(range(len(labels)), labels)
        ax.set_yticks(range(len(labels)), labels)
        ax.set_title(title)
        fig.colorbar(image, ax=ax, shrink=0.85)
    fig.suptitle(f'S-matrix: {slug} (D = {smat.normalization:.6g})')
    fig.tight_layout()
    png_path = outdir / f'{slug}_smatrix.png'
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]
