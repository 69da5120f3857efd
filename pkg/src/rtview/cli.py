"""``tensorctl``: inspect and transform MTF1 tensor files.

Exit codes: 0 success, 2 usage error, 3 file or format error, 4 shape,
bounds or domain error.
"""

from __future__ import annotations

import os
import sys
import tempfile
from typing import Sequence

import click
import numpy as np

from . import tensor_io
from .array_store import Tensor, create, from_view
from .elementwise_ops import OPS, ew_binary
from .errors import ArrayError, FormatError
from .kinds import KINDS, kind_name
from .view_core import Order

EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_DOMAIN = 4


class IntList(click.ParamType):
    name = "LIST"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        text = str(value).strip()
        if not text:
            return ()
        try:
            return tuple(int(part) for part in text.split(","))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)


INT_LIST = IntList()


def _parse_number(text: str, kind: np.dtype, param: str):
    try:
        if np.issubdtype(kind, np.integer):
            return int(text)
        return float(text)
    except ValueError:
        raise click.BadParameter(f"{text!r} is not a valid {kind_name(kind)} value", param_hint=param)


def _load(path: str) -> Tensor:
    return tensor_io.load(path)


def _save(path: str, tensor) -> None:
    """Write atomically: a temporary file in the target directory is renamed."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".tensorctl-", dir=directory)
    try:
        with os.fdopen(fd, "wb") as f:
            tensor_io.write_tensor(f, tensor)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Inspect and transform MTF1 tensor files."""


@main.command()
@click.argument("file")
def info(file):
    """Print dimension, shape, order, element kind and size."""
    t = _load(file)
    click.echo(f"dimension: {t.dimension}")
    click.echo(f"shape: {','.join(str(s) for s in t.shape)}")
    click.echo(f"order: {t.order.value}")
    click.echo(f"kind: {kind_name(t.kind)}")
    click.echo(f"size: {t.size}")


@main.command("print")
@click.argument("file")
@click.option("--style", type=click.Choice(["table", "matrix"]), default="matrix", show_default=True)
def print_(file, style):
    """Render the tensor as text."""
    click.echo(tensor_io.render(_load(file), style), nl=False)


@main.command()
@click.argument("out")
@click.option("--shape", type=INT_LIST, required=True)
@click.option("--fill", default="0", show_default=True)
@click.option("--order", type=click.Choice(["lcmo", "fcmo"]), default="lcmo", show_default=True)
@click.option("--kind", type=click.Choice(list(KINDS)), default="f64", show_default=True)
def new(out, shape, fill, order, kind):
    """Create a tensor with every entry equal to FILL."""
    dtype = KINDS[kind]
    _save(out, create(shape, _parse_number(fill, dtype, "--fill"), order=Order(order), kind=dtype))


@main.command()
@click.argument("file")
@click.argument("out")
@click.option("--shape", type=INT_LIST, required=True)
def reshape(file, out, shape):
    """Reshape, preserving the element at every scalar index."""
    t = _load(file)
    t.reshape(shape)
    _save(out, t)


@main.command()
@click.argument("file")
@click.argument("out")
@click.option("--shape", type=INT_LIST, required=True)
@click.option("--fill", default="0", show_default=True)
def resize(file, out, shape, fill):
    """Resize, keeping coordinate-matched entries and filling the rest."""
    t = _load(file)
    t.resize(shape, _parse_number(fill, t.kind, "--fill"))
    _save(out, t)


@main.command()
@click.argument("file")
@click.argument("out")
@click.option("--perm", type=INT_LIST, required=True)
def permute(file, out, perm):
    """Permute the axes: new axis j is old axis PERM[j]."""
    _save(out, from_view(_load(file).permuted_view(perm)))


@main.command()
@click.argument("file")
@click.argument("out")
@click.option("--axes", type=INT_LIST, default=None, help="J,K to swap; default reverses all axes.")
def transpose(file, out, axes):
    """Swap two axes, or reverse all of them."""
    t = _load(file)
    if axes is None:
        v = t.transposed_view()
    elif len(axes) != 2:
        raise click.BadParameter("expected exactly two axes J,K", param_hint="--axes")
    else:
        v = t.transposed_view(*axes)
    _save(out, from_view(v))


@main.command()
@click.argument("file")
@click.argument("out")
@click.option("--by", "z", type=int, required=True)
def shift(file, out, z):
    """Cyclically shift the axes by Z."""
    _save(out, from_view(_load(file).shifted_view(z)))


@main.command("slice")
@click.argument("file")
@click.argument("out")
@click.option("--base", type=INT_LIST, required=True)
@click.option("--shape", type=INT_LIST, required=True)
@click.option("--squeeze", is_flag=True, help="Drop axes of extent one.")
def slice_(file, out, base, shape, squeeze):
    """Extract the sub-view starting at BASE with extents SHAPE."""
    v = _load(file).view(base, shape)
    if squeeze:
        v = v.squeezed_view()
    _save(out, from_view(v))


@main.command()
@click.argument("file")
@click.argument("out")
@click.option("--axis", type=int, required=True)
@click.option("--at", "value", type=int, required=True)
def bind(file, out, axis, value):
    """Fix one coordinate, dropping that axis."""
    _save(out, from_view(_load(file).bound_view(axis, value)))


@main.command()
@click.argument("op", type=click.Choice(OPS))
@click.argument("paths", nargs=-1, required=True)
@click.option("--scalar", default=None, help="Use this number as right operand instead of file B.")
def binop(op, paths, scalar):
    """Elementwise OP: A B OUT, or A OUT with --scalar."""
    expected = 2 if scalar is not None else 3
    if len(paths) != expected:
        usage = "A OUT with --scalar" if scalar is not None else "A B OUT"
        raise click.UsageError(f"binop expects {usage}")
    a = _load(paths[0])
    b = _parse_number(scalar, a.kind, "--scalar") if scalar is not None else _load(paths[1])
    _save(paths[-1], ew_binary(op, a, b))


def run(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        rv = main.main(args=list(argv) if argv is not None else None, prog_name="tensorctl",
                       standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except (FormatError, OSError) as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_FORMAT
    except ArrayError as exc:
        click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
        return EXIT_DOMAIN
    return rv if isinstance(rv, int) else 0


def entry() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entry()
