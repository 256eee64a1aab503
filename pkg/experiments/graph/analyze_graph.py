"""
Analysis of graph experiments

Plots bits per edge of Random Edge Coding against the Pólya information
content and the Erdős–Rényi baseline.
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


def plot_bits_per_edge(rate: pd.DataFrame, output_file: str):
    fig, ax = plt.subplots(figsize=(12, 5))
    x = np.arange(len(rate))
    width = 0.27
    ax.bar(x - width, rate['payload_bits'] / rate['m'], width, label='REC message')
    ax.bar(x, rate['nll_bits'] / rate['m'], width, label='information content')
    if 'er_bits' in rate:
        ax.bar(x + width, rate['er_bits'] / rate['m'], width, label='Erdős–Rényi')
    ax.set_xticks(x)
    ax.set_xticklabels(rate['graph'], rotation=30, ha='right')
    ax.set_ylabel('bits per edge')
    ax.legend()
    plt.tight_layout()
    plt.savefig(output_file, dpi=150, bbox_inches='tight')
    print(f"  Saved: {output_file}")
    plt.close()


def main():
    """Analyze graph experiments and generate plots."""
    os.makedirs(PLOTS_DIR, exist_ok=True)

    print("\n" + "="*70)
    print("ANALYZING GRAPH EXPERIMENTS")
    print("="*70)

    rate = pd.read_csv(os.path.join(RESULTS_DIR, 'rec_rate.csv'))
    print(rate[['graph', 'm', 'bits_per_edge', 'gap_percent', 'seconds']]
          .to_string(index=False, float_format=lambda v: f"{v:.4f}"))
    plot_bits_per_edge(rate, os.path.join(PLOTS_DIR, 'rec_bits_per_edge.png'))

    print(f"\nPlots saved to: {PLOTS_DIR}/")


if __name__ == "__main__":
    main()
