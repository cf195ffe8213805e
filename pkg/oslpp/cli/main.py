# Copyright (c) 2026, OSLPP contributors
# For license information, please see license.txt

"""
`oslpp` command-line entry point

	oslpp run      --source-features F --source-labels L --target-features F [--target-labels L] --out DIR
	oslpp sweep    ... --dpca 16 32 --d 8 16 --nr 100 140 --iters 10 [--num-proc 4]
	oslpp synth    --out DIR [--n-known 3 --n-unknown 2 --dim 10 --per-class 50 --seed 0]
	oslpp evaluate --predictions P --source-labels L --target-labels L

Exit status is 0 on success and 1 on any input, numerical or pipeline error.
"""

import argparse
import logging
import sys

import oslpp
from oslpp.cli.commands import RunConfig, cli_command, cmd_evaluate, cmd_run, cmd_summarize, cmd_sweep, cmd_synth
from oslpp.config import DEFAULT_PRESET, DEFAULT_SEED, PRESETS
from oslpp.pipeline.runner import Hyperparams
from oslpp.synth.generator import SynthConfig
from oslpp.utils.file_utils import FORMAT_CSV, FORMAT_F32
from oslpp.utils.logger import set_level


def _add_data_args(parser):
	parser.add_argument("--source-features", required=True, help="Source feature file (.csv or .bin)")
	parser.add_argument("--source-labels", required=True, help="Source class ids, one per line")
	parser.add_argument("--target-features", required=True, help="Target feature file (.csv or .bin)")
	parser.add_argument("--target-labels", help="Optional target ground truth for scoring")
	parser.add_argument("--out", required=True, help="Output directory")
	parser.add_argument("--preset", choices=sorted(PRESETS), default=DEFAULT_PRESET, help="Hyper-parameter preset")
	parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Recorded seed")


def build_parser():
	parser = argparse.ArgumentParser(prog="oslpp", description="Open-set domain adaptation with LPP")
	parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
	parser.add_argument("--version", action="version", version=f"%(prog)s {oslpp.__version__}")
	sub = parser.add_subparsers(dest="command", required=True)

	run_p = sub.add_parser("run", help="Adapt once and write predictions and a report")
	_add_data_args(run_p)
	run_p.add_argument("--dpca", type=int, help="PCA dimension")
	run_p.add_argument("--d", type=int, help="Projection dimension")
	run_p.add_argument("--iters", type=int, help="Number of iterations T")
	run_p.add_argument("--nr", type=int, help="Number of seeded rejections")
	run_p.add_argument("--emit-embeddings", action="store_true", help="Dump the embedding after every iteration")
	run_p.add_argument("--emit-trace", action="store_true", help="Write the iteration trace as trace.csv")

	sweep_p = sub.add_parser("sweep", help="Score a grid of hyper-parameters")
	_add_data_args(sweep_p)
	sweep_p.add_argument("--dpca", type=int, nargs="+", help="PCA dimensions")
	sweep_p.add_argument("--d", type=int, nargs="+", help="Projection dimensions")
	sweep_p.add_argument("--iters", type=int, nargs="+", help="Iteration counts")
	sweep_p.add_argument("--nr", type=int, nargs="+", help="Seeded rejection counts")
	sweep_p.add_argument("--num-proc", type=int, default=1, help="Worker processes")

	synth_p = sub.add_parser("synth", help="Write a synthetic open-set dataset")
	synth_p.add_argument("--out", required=True, help="Output directory")
	synth_p.add_argument("--format", choices=[FORMAT_CSV, FORMAT_F32], default=FORMAT_CSV)
	synth_p.add_argument("--n-known", type=int, default=SynthConfig.n_known)
	synth_p.add_argument("--n-unknown", type=int, default=SynthConfig.n_unknown)
	synth_p.add_argument("--dim", type=int, default=SynthConfig.dim)
	synth_p.add_argument("--per-class", type=int, default=SynthConfig.per_class)
	synth_p.add_argument("--shift", type=float, default=SynthConfig.shift)
	synth_p.add_argument("--spread", type=float, default=SynthConfig.spread)
	synth_p.add_argument("--unknown-margin", type=float, default=SynthConfig.unknown_margin)
	synth_p.add_argument("--seed", type=int, default=SynthConfig.seed)

	eval_p = sub.add_parser("evaluate", help="Score a predictions file")
	eval_p.add_argument("--predictions", required=True)
	eval_p.add_argument("--source-labels", required=True, help="Defines the known classes")
	eval_p.add_argument("--target-labels", required=True)

	summary_p = sub.add_parser("summarize", help="Average metrics over several report.json files")
	summary_p.add_argument("reports", nargs="+", help="report.json files")

	return parser


def _verbosity(count):
	if count >= 2:
		return logging.DEBUG
	return logging.INFO if count == 1 else None


def _run_config(args, hp):
	return RunConfig(
		source_features=args.source_features,
		source_labels=args.source_labels,
		target_features=args.target_features,
		target_labels=args.target_labels,
		hp=hp,
		out_dir=args.out,
		emit_embeddings=getattr(args, "emit_embeddings", False),
		emit_trace=getattr(args, "emit_trace", False),
	)


# Hyperparams and SynthConfig validate here, before any command runs
@cli_command
def _dispatch(args):
	if args.command == "run":
		hp = Hyperparams.from_preset(
			args.preset, d_pca=args.dpca, d=args.d, T=args.iters, n_r=args.nr, seed=args.seed
		)
		return cmd_run(_run_config(args, hp))

	if args.command == "sweep":
		grid = {"d_pca": args.dpca, "d": args.d, "n_r": args.nr, "T": args.iters}
		# cells override the preset; the preset only fills axes left out of the grid
		hp = Hyperparams.from_preset(args.preset, seed=args.seed)
		return cmd_sweep(_run_config(args, hp), {k: v for k, v in grid.items() if v is not None}, args.num_proc)

	if args.command == "synth":
		cfg = SynthConfig(
			n_known=args.n_known,
			n_unknown=args.n_unknown,
			dim=args.dim,
			per_class=args.per_class,
			shift=args.shift,
			spread=args.spread,
			unknown_margin=args.unknown_margin,
			seed=args.seed,
		)
		return cmd_synth(cfg, args.out, args.format)

	if args.command == "evaluate":
		return cmd_evaluate(args.predictions, args.source_labels, args.target_labels)

	return cmd_summarize(args.reports)


def main(argv=None):
	"""Parse arguments, run one subcommand and return its exit status"""
	args = build_parser().parse_args(argv)
	level = _verbosity(args.verbose)
	if level is not None:
		set_level(level)

	return _dispatch(args)


if __name__ == "__main__":
	sys.exit(main())
