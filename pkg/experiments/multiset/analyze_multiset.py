"""
Analysis of multiset experiments

Plots ROC message size against information content, encode+decode time
against multiset size, and order savings against log2 n!.
"""

import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import pandas as pd

HERE = os.path.dirname(os.path.abspath(__file__))
RESULTS_DIR = os.path.join(HERE, 'results')
PLOTS_DIR = os.path.join(HERE, 'plots')


def plot_rate(rate: pd.DataFrame, output_file: str):
    fig, axes = plt.subplots(1, 2, figsize=(14, 5))
    for alphabet, group in rate.groupby('alphabet'):
        axes[0].plot(group['size'], group['payload_bits'] / group['size'], marker='o',
                     label=f'ROC, alphabet {alphabet}')
        axes[1].plot(group['size'], group['seconds'], marker='o', label=f'alphabet {alphabet}')
    first = rate[rate['alphabet'] == rate['alphabet'].min()]
    axes[0].plot(first['size'], first['info_bits'] / first['size'], 'k--', label='information content')
    axes[0].set_xscale('log', base=2)
    axes[0].set_xlabel('multiset size')
    axes[0].set_ylabel('bits per element')
    axes[0].legend()
    axes[1].set_xscale('log', base=2)
    axes[1].set_yscale('log')
    axes[1].set_xlabel('multiset size')
    axes[1].set_ylabel('encode + decode time (s)')
    axes[1].legend()
    plt.tight_layout()
    plt.savefig(output_file, dpi=150, bbox_inches='tight')
    print(f"  Saved: {output_file}")
    plt.close()


def plot_savings(savings: pd.DataFrame, output_file: str):
    fig, ax = plt.subplots(figsize=(7, 5))
    ax.plot(savings['n'], savings['savings_bits'] / savings['n'], marker='o', label='measured')
    ax.plot(savings['n'], savings['limit_bits'] / savings['n'], 'k--', label='log2 n! / n')
    ax.set_xscale('log')
    ax.set_xlabel('records')
    ax.set_ylabel('bits saved per record')
    ax.legend()
    plt.tight_layout()
    plt.savefig(output_file, dpi=150, bbox_inches='tight')
    print(f"  Saved: {output_file}")
    plt.close()


def main():
    """Analyze multiset experiments and generate plots."""
    os.makedirs(PLOTS_DIR, exist_ok=True)

    print("\n" + "="*70)
    print("ANALYZING MULTISET EXPERIMENTS")
    print("="*70)

    rate = pd.read_csv(os.path.join(RESULTS_DIR, 'roc_rate.csv'))
    print(f"  Largest |payload - information content|: {rate['gap_bits'].abs().max():.1f} bits")
    plot_rate(rate, os.path.join(PLOTS_DIR, 'roc_rate.png'))

    savings = pd.read_csv(os.path.join(RESULTS_DIR, 'order_savings.csv'))
    gap = (savings['savings_bits'] - savings['limit_bits']).abs().max()
    print(f"  Largest |savings - log2 n!|: {gap:.1f} bits")
    plot_savings(savings, os.path.join(PLOTS_DIR, 'order_savings.png'))

    print(f"\nPlots saved to: {PLOTS_DIR}/")


if __name__ == "__main__":
    main()
