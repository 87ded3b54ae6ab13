"""CSV and figure rendering for the report-style CLI commands.

Delimited output and matplotlib figures are written side by side in the
requested output directory; stdout carries a short human summary (or the
same rows as JSON/CSV when asked).
"""

import csv
import io
import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def rows_to_csv(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def write_text(path: str, text: str) -> None:
    with open(path, "w") as fh:
        fh.write(text)


def growth_figure(report, path: str) -> None:
    ns = [r.n for r in report.rows]
    vals = [math.exp(r.normalized) for r in report.rows]
    ref = math.exp(report.reference_log_mahler)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, vals, "o-", label=r"$|W_n|^{1/n^N}$")
    ax.axhline(ref, color="tab:red", ls="--", label="Mahler measure")
    ax.set_xlabel("n")
    ax.set_ylabel("normalized product size")
    ax.set_title("Growth of torus products")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def mahler_figure(levels, values, errors, path: str) -> None:
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.plot(levels, values, "o-")
    ax1.set_xlabel("refinement level")
    ax1.set_ylabel("estimate")
    ax1.set_title("Quadrature value")
    ax2.semilogy(levels, [max(e, 1e-17) for e in errors], "o-")
    ax2.set_xlabel("refinement level")
    ax2.set_ylabel("successive difference")
    ax2.set_title("Error indicator")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def ra_figure(records, path: str, p: int) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    orders = [r.order for r in records]
    ax.stem(orders, [1] * len(orders)) if orders else ax.text(
        0.5, 0.5, "no ranks of apparition in range", ha="center"
    )
    ax.set_xlabel("subgroup order")
    ax.set_yticks([])
    ax.set_title(f"Ranks of apparition for p = {p}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def zsig_figure(records, path: str) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    xs = list(range(len(records)))
    heights = [
        r.primitive_part.value().bit_length() if not r.in_zsigmondy_set else 0
        for r in records
    ]
    colors = ["tab:red" if r.in_zsigmondy_set else "tab:blue" for r in records]
    ax.bar(xs, heights, color=colors)
    ax.set_xlabel("cyclic subgroup (canonical order)")
    ax.set_ylabel("primitive part bits")
    ax.set_title("Primitive parts (red = no primitive prime divisor)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def ptfamily_figure(rows, path: str) -> None:
    # rows: (n, degW, degB, gcd_deg, gcd_bound)
    ns = [r[0] for r in rows]
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 4))
    ax1.plot(ns, [r[1] for r in rows], "o-", label="deg W_n")
    ax1.plot(ns, [r[2] for r in rows], "s-", label="deg B_n")
    ax1.set_xlabel("n")
    ax1.legend()
    ax1.set_title("Family degrees")
    ax2.plot(ns, [r[3] for r in rows], "o-", label="gcd degree")
    ax2.plot(ns, [r[4] for r in rows], "--", label="lower bound")
    ax2.set_xlabel("n")
    ax2.legend()
    ax2.set_title("Common factor with the shifted member")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def density_figure(report, path: str) -> None:
    fig, ax = plt.subplots(figsize=(7, 4))
    if report.primes_in_set:
        xs = report.primes_in_set
        ys = [math.log(p) / p for p in xs]
        ax.stem(xs, ys)
    ax.axhline(0, color="k", lw=0.5)
    ax.set_xlabel("prime")
    ax.set_ylabel("log p / p")
    ax.set_title(
        f"Small ranks of apparition (partial sum {report.partial_log_sum:.4f}, "
        f"bound {report.density_bound:.2f})"
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
