"""
Analysis of bits-back experiments

Plots the running BB-ANS rate of each model against its NELBO.
"""

import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import pandas as pd

HERE = os.path.dirname(os.path.abspath(__file__))
RESULTS_DIR = os.path.join(HERE, 'results')
PLOTS_DIR = os.path.join(HERE, 'plots')


def main():
    """Analyze bits-back experiments and generate plots."""
    os.makedirs(PLOTS_DIR, exist_ok=True)

    print("\n" + "="*70)
    print("ANALYZING BITS-BACK EXPERIMENTS")
    print("="*70)

    rate = pd.read_csv(os.path.join(RESULTS_DIR, 'bbans_rate.csv'))
    fig, ax = plt.subplots(figsize=(8, 5))
    for name, group in rate.groupby('model'):
        line, = ax.plot(group['symbols'], group['bits_per_symbol'], label=f'{name} BB-ANS')
        ax.axhline(group['nelbo'].iloc[0], color=line.get_color(), linestyle='--', linewidth=1)
        final = group.iloc[-1]
        print(f"  {name:<16} rate - NELBO = {final['bits_per_symbol'] - final['nelbo']:+.4f} bits")
    ax.set_xscale('log')
    ax.set_xlabel('symbols coded')
    ax.set_ylabel('bits per symbol (dashed: NELBO)')
    ax.legend()
    output_file = os.path.join(PLOTS_DIR, 'bbans_rate.png')
    plt.tight_layout()
    plt.savefig(output_file, dpi=150, bbox_inches='tight')
    print(f"  Saved: {output_file}")
    plt.close()

    print(f"\nPlots saved to: {PLOTS_DIR}/")


if __name__ == "__main__":
    main()
