#!/usr/bin/env python3
"""
permucodec - Experiment Runner

This script provides a unified interface to run the rate experiments.

Usage:
    python run_experiments.py --object <object> [--analyze]

Examples:
    # Run the multiset rate experiments
    python run_experiments.py --object multiset

    # Run the graph experiments and plot the results
    python run_experiments.py --object graph --analyze

    # Run everything
    python run_experiments.py --object all --analyze
"""

import argparse
import os
import subprocess
import sys

PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))

OBJECTS = ['multiset', 'partition', 'graph', 'lvm']


def run_command(cmd, cwd):
    """Run a command and return whether it succeeded."""
    print(f"\n{'='*70}")
    print(f"Running: {' '.join(cmd)}")
    print(f"Working directory: {cwd}")
    print(f"{'='*70}\n")

    result = subprocess.run(cmd, cwd=cwd, capture_output=False, text=True)

    if result.returncode != 0:
        print(f"\n[ERROR] Command failed with exit code {result.returncode}")
        return False
    return True


def run_object(name, analyze=False):
    """Run the experiments of one object type."""
    experiment_dir = os.path.join(PROJECT_ROOT, 'experiments', name)

    if not os.path.exists(experiment_dir):
        print(f"[WARNING] Experiment directory not found: {experiment_dir}")
        return False

    success = run_command([sys.executable, f'run_{name}_experiments.py'], experiment_dir)

    if analyze and success:
        print("\nRunning analysis...")
        success = run_command([sys.executable, f'analyze_{name}.py'], experiment_dir)

    return success


def main():
    parser = argparse.ArgumentParser(
        description='Run permucodec rate experiments',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Objects:
  multiset   - ROC rate vs information content; order savings for distinct records
  partition  - RCC savings, min/max savings bracket, vector index savings table
  graph      - REC rate on preferential-attachment and uniform multigraphs
  lvm        - BB-ANS rate vs NELBO
  all        - Every object above

Examples:
  python run_experiments.py --object multiset
  python run_experiments.py --object graph --analyze
  python run_experiments.py --object all --analyze
        """
    )

    parser.add_argument(
        '--object', '-o',
        required=True,
        choices=OBJECTS + ['all'],
        help='Object type whose experiments to run'
    )

    parser.add_argument(
        '--analyze', '-a',
        action='store_true',
        help='Run analysis and generate plots after experiments'
    )

    args = parser.parse_args()
    selected = OBJECTS if args.object == 'all' else [args.object]

    print(f"\n{'#'*70}")
    print("# PERMUCODEC EXPERIMENTS")
    print(f"# Objects: {', '.join(name.upper() for name in selected)}")
    print(f"# Analysis: {'ENABLED' if args.analyze else 'DISABLED'}")
    print(f"{'#'*70}\n")

    success = True
    for name in selected:
        success = run_object(name, args.analyze) and success

    if success:
        print(f"\n{'='*70}")
        print("ALL EXPERIMENTS COMPLETED SUCCESSFULLY")
        print(f"{'='*70}\n")

        print("Results saved to:")
        for name in selected:
            print(f"  - {os.path.join(PROJECT_ROOT, 'experiments', name, 'results')}")
        if args.analyze:
            print("\nPlots saved to:")
            for name in selected:
                print(f"  - {os.path.join(PROJECT_ROOT, 'experiments', name, 'plots')}")
    else:
        print(f"\n{'='*70}")
        print("[ERROR] Some experiments failed")
        print(f"{'='*70}\n")
        sys.exit(1)


if __name__ == '__main__':
    main()
