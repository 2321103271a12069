"""Command-line interface: fit, transform, plot, inspect.

Exit codes: 0 on success, 2 for input or validation problems, 3 for
numerical failures.  Diagnostics go to standard error; success paths write
nothing there.
"""

from __future__ import annotations

import argparse
import re
import sys

from .dataset import read_dataset, read_header, write_embedding_csv
from .errors import DatasetError, LocalFisherError, NumericalError
from .kernel import fit_klfda, gauss_kernel_matrix, median_pairwise_distance
from .labels import encode_labels
from .lfda import DEFAULT_KNN, METRICS, fit_lfda, transform
from .model_io import ModelBundle, load_model, save_model
from .semi import SelfConfig, discard_labels, fit_self
from .svgplot import render_scatter_svg

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NUMERICAL = 3

_Z_COLUMN = re.compile(r"Z[0-9]+\Z")


def _fraction(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="localfisher",
        description="Supervised dimensionality reduction by local Fisher "
        "discriminant analysis, with kernel and semi-supervised variants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fit = sub.add_parser("fit", help="fit a model from a labeled CSV file")
    fit.add_argument("--input", required=True, help="training CSV file")
    fit.add_argument("--label-col", required=True, help="name of the label column")
    fit.add_argument("--method", required=True, choices=("lfda", "klfda", "self"))
    fit.add_argument("--r", required=True, type=int, help="target dimension")
    fit.add_argument("--metric", default="plain", choices=METRICS)
    fit.add_argument("--knn", type=int, default=None,
                     help="local-scaling neighbor count (default 7; 5 for self)")
    fit.add_argument("--sigma", default="1",
                     help="kernel bandwidth for klfda: a number or 'auto'")
    fit.add_argument("--beta", type=_fraction, default=0.1,
                     help="semi-supervision blend for self, in [0, 1]")
    fit.add_argument("--min-obs-per-label", type=int, default=5)
    fit.add_argument("--discard-fraction", type=_fraction, default=None,
                     help="drop this fraction of labels before fitting")
    fit.add_argument("--seed", type=int, default=0,
                     help="seed for --discard-fraction")
    fit.add_argument("--output", required=True, help="model file to write")
    fit.set_defaults(func=cmd_fit)

    tr = sub.add_parser("transform", help="embed a CSV file through a model")
    tr.add_argument("--model", required=True)
    tr.add_argument("--input", required=True)
    tr.add_argument("--output", required=True, help="embedding CSV to write")
    tr.set_defaults(func=cmd_transform)

    plot = sub.add_parser("plot", help="render an embedding CSV as an SVG scatter")
    plot.add_argument("--input", required=True, help="embedding CSV (Z1..Zr columns)")
    plot.add_argument("--output", required=True, help="SVG file to write")
    plot.add_argument("--dims", default="0,1",
                      help="zero-based embedding dims to draw, as 'i,j'")
    plot.add_argument("--label-col", default=None,
                      help="label column for coloring (default: the one "
                      "non-embedding column, if any)")
    plot.set_defaults(func=cmd_plot)

    ins = sub.add_parser("inspect", help="print a model file summary")
    ins.add_argument("--model", required=True)
    ins.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except LocalFisherError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entrypoint() -> None:
    sys.exit(main())


def _format_values(values) -> str:
    return " ".join(format(float(v), ".6g") for v in values)


def cmd_fit(args) -> int:
    ds = read_dataset(args.input, label_col=args.label_col)
    labels = ds.labels
    if args.discard_fraction is not None:
        labels = discard_labels(labels, args.discard_fraction, args.seed)
    n, d = ds.x.shape
    if args.r > d and args.method in ("lfda", "self"):
        raise DatasetError(f"r exceeds feature count (r={args.r}, d={d})")

    if args.method == "lfda":
        knn = DEFAULT_KNN if args.knn is None else args.knn
        model = fit_lfda(ds.x, labels, args.r, metric=args.metric, k=knn)
    elif args.method == "klfda":
        knn = DEFAULT_KNN if args.knn is None else args.knn
        if args.sigma == "auto":
            sigma = median_pairwise_distance(ds.x)
        else:
            try:
                sigma = float(args.sigma)
            except ValueError:
                raise DatasetError(
                    f"--sigma must be a number or 'auto', got {args.sigma!r}"
                ) from None
        kmat = gauss_kernel_matrix(ds.x, sigma)
        model = fit_klfda(kmat, labels, args.r, metric=args.metric, k=knn,
                          training_data=ds.x, sigma=sigma)
    else:
        cfg = SelfConfig(
            r=args.r,
            beta=args.beta,
            knn=5 if args.knn is None else args.knn,
            min_obs_per_label=args.min_obs_per_label,
            metric=args.metric,
        )
        model = fit_self(ds.x, labels, cfg)

    enc = encode_labels(labels)
    bundle = ModelBundle(
        model=model,
        feature_names=ds.feature_names,
        label_classes=list(enc.classes),
        label_col=args.label_col,
    )
    save_model(args.output, bundle)

    parts = [f"{args.method}:", f"n={n}"]
    if args.method == "self":
        parts += [f"labeled={enc.n_labeled}", f"unlabeled={n - enc.n_labeled}"]
    parts += [f"d={d}", f"r={args.r}", f"metric={args.metric}"]
    if args.method == "klfda":
        parts.append(f"sigma={format(sigma, '.6g')}")
    parts.append(f"eigenvalues={_format_values(model.eigenvalues)}")
    print(" ".join(parts))
    return EXIT_OK


def cmd_transform(args) -> int:
    bundle = load_model(args.model)
    header = read_header(args.input)
    label_col = bundle.label_col if bundle.label_col in header else None
    ds = read_dataset(args.input, label_col=label_col,
                      feature_cols=bundle.feature_names)
    z = transform(bundle.model, ds.x)
    write_embedding_csv(args.output, z, labels=ds.labels, label_col=label_col)
    return EXIT_OK


def cmd_plot(args) -> int:
    header = read_header(args.input)
    zcols = sorted(
        (name for name in header if _Z_COLUMN.match(name)),
        key=lambda name: int(name[1:]),
    )
    if len(zcols) < 2:
        raise DatasetError(
            f"{args.input}: need at least 2 embedding columns (Z1, Z2, ...), "
            f"found {len(zcols)}"
        )
    others = [name for name in header if name not in zcols]
    label_col = args.label_col
    if label_col is None and len(others) == 1:
        label_col = others[0]
    elif label_col is None and len(others) > 1:
        raise DatasetError(
            f"{args.input}: several non-embedding columns "
            f"({', '.join(others)}); pass --label-col"
        )

    try:
        i_str, j_str = args.dims.split(",")
        dim_i, dim_j = int(i_str), int(j_str)
    except ValueError:
        raise DatasetError(f"--dims must be 'i,j', got {args.dims!r}") from None
    for dim in (dim_i, dim_j):
        if not 0 <= dim < len(zcols):
            raise DatasetError(
                f"dimension {dim} out of range 0..{len(zcols) - 1}"
            )

    ds = read_dataset(args.input, label_col=label_col, feature_cols=zcols)
    svg = render_scatter_svg(
        ds.x[:, dim_i],
        ds.x[:, dim_j],
        labels=ds.labels,
        xlabel=f"Z{dim_i + 1}",
        ylabel=f"Z{dim_j + 1}",
    )
    with open(args.output, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(svg)
    return EXIT_OK


def cmd_inspect(args) -> int:
    bundle = load_model(args.model)
    model = bundle.model
    rows, cols = model.transform.shape
    lines = [
        f"kind: {model.kind}",
        f"metric: {model.metric}",
        f"r: {model.r}",
        f"transform: {rows}x{cols}",
        f"eigenvalues: {_format_values(model.eigenvalues)}",
        f"feature_names: {', '.join(bundle.feature_names)}",
        f"classes: {', '.join(bundle.label_classes)}",
    ]
    for key in sorted(model.fit_params):
        value = model.fit_params[key]
        if isinstance(value, float):
            value = format(value, ".6g")
        lines.append(f"{key}: {value}")
    if model.kind == "klfda":
        transformable = model.training_data is not None and model.sigma is not None
        if transformable:
            tn, td = model.training_data.shape
            lines.append(f"training_data: {tn}x{td}")
        lines.append(f"transformable: {'true' if transformable else 'false'}")
    print("\n".join(lines))
    return EXIT_OK
