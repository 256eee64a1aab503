"""
Analysis of partition experiments

Plots measured RCC savings against the order information, the savings
bracket of the max/min configurations, and the coding times of RCC, ROC-1
and ROC-2.
"""

import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

HERE = os.path.dirname(os.path.abspath(__file__))
RESULTS_DIR = os.path.join(HERE, 'results')
PLOTS_DIR = os.path.join(HERE, 'plots')


def plot_savings(savings: pd.DataFrame, output_file: str):
    fig, ax = plt.subplots(figsize=(7, 6))
    ax.scatter(savings['expected_bits'], savings['measured_bits'], s=12)
    top = max(savings['expected_bits'].max(), 1.0)
    ax.plot([0, top], [0, top], 'k--', linewidth=1)
    ax.set_xlabel('sum log2 (n_i - 1)!  (bits)')
    ax.set_ylabel('measured savings (bits)')
    plt.tight_layout()
    plt.savefig(output_file, dpi=150, bbox_inches='tight')
    print(f"  Saved: {output_file}")
    plt.close()


def plot_bracket(bracket: pd.DataFrame, output_file: str):
    fig, ax = plt.subplots(figsize=(8, 5))
    ax.plot(bracket['k'], bracket['max_bits'], marker='^', label='max savings configuration')
    ax.plot(bracket['k'], bracket['min_bits'], marker='v', label='min savings configuration')
    ax.fill_between(bracket['k'], bracket['random_min_bits'], bracket['random_max_bits'],
                    alpha=0.3, label='random configurations')
    ax.set_xscale('log')
    ax.set_xlabel('clusters k')
    ax.set_ylabel('order information (bits)')
    ax.legend()
    plt.tight_layout()
    plt.savefig(output_file, dpi=150, bbox_inches='tight')
    print(f"  Saved: {output_file}")
    plt.close()


def plot_timing(times: pd.DataFrame, output_file: str):
    ns = sorted(times['n'].unique())
    fig, axes = plt.subplots(1, len(ns), figsize=(5 * len(ns), 4), sharey=True)
    for ax, n in zip(np.atleast_1d(axes), ns):
        at_n = times[times['n'] == n]
        for scheme, rows in at_n.groupby('scheme'):
            ax.plot(rows['k'], rows['encode_s'] + rows['decode_s'], marker='o', label=scheme)
        ax.set_xscale('log')
        ax.set_title(f'n={n}')
        ax.set_xlabel('clusters k')
    np.atleast_1d(axes)[0].set_ylabel('encode + decode time (s)')
    np.atleast_1d(axes)[0].legend()
    plt.tight_layout()
    plt.savefig(output_file, dpi=150, bbox_inches='tight')
    print(f"  Saved: {output_file}")
    plt.close()


def main():
    """Analyze partition experiments and generate plots."""
    os.makedirs(PLOTS_DIR, exist_ok=True)

    print("\n" + "="*70)
    print("ANALYZING PARTITION EXPERIMENTS")
    print("="*70)

    savings = pd.read_csv(os.path.join(RESULTS_DIR, 'rcc_savings.csv'))
    gap = (savings['measured_bits'] - savings['expected_bits']).abs().max()
    print(f"  Largest |measured - expected| savings: {gap:.2f} bits")
    plot_savings(savings, os.path.join(PLOTS_DIR, 'rcc_savings.png'))

    plot_bracket(pd.read_csv(os.path.join(RESULTS_DIR, 'savings_bracket.csv')),
                 os.path.join(PLOTS_DIR, 'savings_bracket.png'))

    table = pd.read_csv(os.path.join(RESULTS_DIR, 'index_savings.csv'))
    print("\nVector index savings:")
    print(table.to_string(index=False, float_format=lambda v: f"{v:.2f}"))

    times = pd.read_csv(os.path.join(RESULTS_DIR, 'coding_times.csv'))
    totals = times.assign(total_s=times['encode_s'] + times['decode_s'])
    print("\nCoding time (encode + decode, s):")
    print(totals.pivot_table(index=['n', 'k'], columns='scheme', values='total_s')
          .to_string(float_format=lambda v: f"{v:.4f}"))
    plot_timing(times, os.path.join(PLOTS_DIR, 'coding_times.png'))

    print(f"\nPlots saved to: {PLOTS_DIR}/")


if __name__ == "__main__":
    main()
