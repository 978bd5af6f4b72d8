"""Command-line entry point: ``relmap {map,heatmap,grad,bench}``.

Exit codes: 0 on success, 2 on an invalid configuration, 3 on a numerical
failure. Every configuration is validated before anything is computed or
written.
"""
import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import io
from .approx import DEFAULT_EPS, DEFAULT_P, NORM_MODES
from .bench import TIMED_METHODS, mse, sweep_p, timing
from .errors import NumericalFailureError, RelmapError
from .grad import conv_score, ds_dk, ds_dl, fd_check
from .grid import make_disk
from .morphology import TNORMS
from .relation import (
    METHOD_NAMES,
    compute_map,
    disk_footprint,
    heatmap_from_map,
    make_method,
    midcut,
    pixel_footprint,
    score,
)
from .scenes import CROWN_RADII, FAR_RADII, RELATIONS, build_scene

log = logging.getLogger("relmap")

EXIT_CONFIG = 2
EXIT_NUMERIC = 3


class ConfigError(RelmapError):
    pass


@dataclass
class RunConfig:
    command: str
    width: int = 100
    height: int = 100
    relation: str = "right"
    origin_value: float = 1.0
    crown: tuple = CROWN_RADII
    far: tuple = FAR_RADII
    kernel_size: tuple = None
    methods: list = field(default_factory=lambda: ["dilation"])
    p: float = DEFAULT_P
    eps: float = DEFAULT_EPS
    tnorm: str = "product"
    norm_mode: str = "kernel_sum"
    target: str = "disk"
    target_radius: float = None
    target_center: tuple = None
    target_empty: bool = False
    diff: bool = False
    out: Path = Path("out")
    seed: int = 0
    fd_samples: int = 16
    fd_step: float = 1e-6
    threads: int = None
    sizes: list = None
    p_values: list = None
    repeats: int = 5
    warmup: int = 1
    bench: str = None

    def validate(self):
        if self.width < 1 or self.height < 1:
            raise ConfigError(f"image size must be >= 1, got {self.width}x{self.height}")
        if self.relation not in RELATIONS:
            raise ConfigError(f"unknown relation {self.relation!r}")
        if not 0 <= self.origin_value <= 1:
            raise ConfigError("--origin-value must lie in [0, 1]")
        if not (self.p > 0 and np.isfinite(self.p)):
            raise ConfigError("--p must be a positive finite number")
        if not self.eps > 0:
            raise ConfigError("--eps must be > 0")
        if self.kernel_size is not None and any(s < 1 or s % 2 == 0 for s in self.kernel_size):
            raise ConfigError("--kernel-size values must be odd and >= 1")
        if self.target_radius is not None and self.target_radius < 0:
            raise ConfigError("--target-radius must be >= 0")
        if self.target_center is not None:
            col, row = self.target_center
            if not (0 <= col < self.width and 0 <= row < self.height):
                raise ConfigError("--target-center lies outside the image")
        if self.fd_samples < 0 or not self.fd_step > 0:
            raise ConfigError("--fd-samples must be >= 0 and --fd-step > 0")
        if self.threads is not None and self.threads < 1:
            raise ConfigError("--threads must be >= 1")
        if self.sizes is not None and any(s < 1 for s in self.sizes):
            raise ConfigError("--sizes must be >= 1")
        if self.p_values is not None and any(not p > 0 for p in self.p_values):
            raise ConfigError("--p-values must all be > 0")
        if self.command == "bench" and self.bench == "timing":
            if self.repeats < 3 or self.warmup < 1:
                raise ConfigError("timing needs --repeats >= 3 and --warmup >= 1")
        for name in self.methods:
            make_method(name, self.p, self.eps, self.tnorm, self.norm_mode)

    def scene(self):
        return build_scene(
            self.relation, self.width, self.height, self.origin_value,
            crown=self.crown, far=self.far, support=self.kernel_size,
        )

    def method(self, name):
        return make_method(name, self.p, self.eps, self.tnorm, self.norm_mode)

    def footprint(self):
        if self.target == "pixel":
            return pixel_footprint()
        radius = self.target_radius if self.target_radius is not None else min(self.width, self.height) / 20
        return disk_footprint(radius)


def _add_scene_args(p):
    p.add_argument("--size", type=int, help="square image side (sets width and height)")
    p.add_argument("--width", type=int, default=100)
    p.add_argument("--height", type=int, default=100)
    p.add_argument("--relation", choices=RELATIONS, default="right")
    p.add_argument("--origin-value", type=float, default=1.0,
                   help="origin weight of the directional kernel")
    p.add_argument("--crown-radii", type=float, nargs=4, default=CROWN_RADII, metavar="F",
                   help="ring knots of the 'close' kernel as fractions of the image side")
    p.add_argument("--far-radii", type=float, nargs=2, default=FAR_RADII, metavar="F",
                   help="ramp of the 'far' kernel as fractions of the image side")
    p.add_argument("--kernel-size", type=int, nargs=2, metavar=("SX", "SY"),
                   help="kernel support (default 2W-1 x 2H-1)")
    p.add_argument("--threads", type=int, help="worker threads (default RELMAP_THREADS or 1)")
    p.add_argument("--out", type=Path, default=Path("out"))


def _add_method_args(p, multiple=False):
    if multiple:
        p.add_argument("--methods", nargs="+", choices=METHOD_NAMES, default=list(METHOD_NAMES))
    else:
        p.add_argument("--method", choices=METHOD_NAMES, default="dilation")
    p.add_argument("--p", type=float, default=DEFAULT_P)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--tnorm", choices=sorted(TNORMS), default="product")
    p.add_argument("--norm-mode", choices=NORM_MODES, default="kernel_sum")


def _add_target_args(p):
    p.add_argument("--target", choices=("disk", "pixel"), default="disk")
    p.add_argument("--target-radius", type=float, help="default: image side / 20")


def build_parser():
    parser = argparse.ArgumentParser(prog="relmap", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("map", help="write a relational map")
    _add_scene_args(p)
    _add_method_args(p)
    p.add_argument("--diff", action="store_true", help="also write |map - dilation map|")

    p = sub.add_parser("heatmap", help="write score heatmaps and midcuts")
    _add_scene_args(p)
    _add_method_args(p, multiple=True)
    _add_target_args(p)

    p = sub.add_parser("grad", help="write score gradients and check them numerically")
    _add_scene_args(p)
    p.add_argument("--norm-mode", choices=NORM_MODES, default="kernel_sum")
    _add_target_args(p)
    p.add_argument("--target-center", type=int, nargs=2, metavar=("COL", "ROW"),
                   help="default: (W - W/5, H/2)")
    p.add_argument("--target-empty", action="store_true", help="use an all-zero target")
    p.add_argument("--seed", type=int, default=0, help="seed for the probed pixel sample")
    p.add_argument("--fd-samples", type=int, default=16,
                   help="source pixels probed for the source gradient (0 = all)")
    p.add_argument("--fd-step", type=float, default=1e-6)

    p = sub.add_parser("bench", help="p sweep or timing comparison")
    bsub = p.add_subparsers(dest="bench", required=True)
    b = bsub.add_parser("sweep-p")
    b.add_argument("--sizes", type=int, nargs="+", default=[100, 200])
    b.add_argument("--p-values", type=float, nargs="+", default=[1, 3, 10, 30, 100, 300])
    b.add_argument("--threads", type=int)
    b.add_argument("--out", type=Path, default=Path("out"))
    b = bsub.add_parser("timing")
    b.add_argument("--sizes", type=int, nargs="+", default=[25, 50, 100, 150, 200])
    b.add_argument("--p", type=float, default=DEFAULT_P)
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--warmup", type=int, default=1)
    b.add_argument("--out", type=Path, default=Path("out"))
    return parser


def config_from_args(args):
    cfg = RunConfig(command=args.command)
    for name in ("width", "height", "relation", "origin_value", "p", "eps", "tnorm", "norm_mode",
                 "target", "target_radius", "target_empty", "diff", "out", "seed", "fd_samples",
                 "fd_step", "threads", "sizes", "p_values", "repeats", "warmup", "bench"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "size", None) is not None:
        cfg.width = cfg.height = args.size
    if hasattr(args, "crown_radii"):
        cfg.crown = tuple(args.crown_radii)
        cfg.far = tuple(args.far_radii)
    if getattr(args, "kernel_size", None):
        cfg.kernel_size = tuple(args.kernel_size)
    if getattr(args, "target_center", None):
        cfg.target_center = tuple(args.target_center)
    if hasattr(args, "methods"):
        cfg.methods = list(args.methods)
    elif hasattr(args, "method"):
        cfg.methods = [args.method]
    else:
        cfg.methods = []
    cfg.validate()
    return cfg


def _save(out, stem, grid, signed=False):
    io.write_grid(out / f"{stem}.grid", grid)
    image = (np.asarray(grid) + 1.0) / 2.0 if signed else grid
    io.write_pgm(out / f"{stem}.pgm", image)


def cmd_map(cfg):
    scene = cfg.scene()
    name = cfg.methods[0]
    phi = compute_map(scene.source, scene.kernel, cfg.method(name), cfg.threads)
    cfg.out.mkdir(parents=True, exist_ok=True)
    _save(cfg.out, f"phi_{cfg.relation}_{name}", phi)
    if cfg.diff:
        exact = phi if name == "dilation" else compute_map(
            scene.source, scene.kernel, cfg.method("dilation"), cfg.threads)
        _save(cfg.out, f"phi_{cfg.relation}_{name}_diff", np.abs(phi - exact))
        print(f"mse {name} vs dilation: {mse(phi, exact)!r}")
    return 0


def cmd_heatmap(cfg):
    scene = cfg.scene()
    fp = cfg.footprint()
    names = list(dict.fromkeys(["dilation"] + cfg.methods))
    heat = {}
    for name in names:
        phi = compute_map(scene.source, scene.kernel, cfg.method(name), cfg.threads)
        heat[name] = heatmap_from_map(phi, fp, cfg.threads)
    cfg.out.mkdir(parents=True, exist_ok=True)
    rel = cfg.relation
    for name in cfg.methods:
        _save(cfg.out, f"heat_{rel}_{name}", heat[name])
        if name != "dilation":
            _save(cfg.out, f"heatdiff_{rel}_{name}", heat[name] - heat["dilation"], signed=True)
    for axis, tag in (("mid_x", "midx"), ("mid_y", "midy")):
        cuts = [midcut(heat[name], axis) for name in cfg.methods]
        rows = ([i] + [float(c[i]) for c in cuts] for i in range(len(cuts[0])))
        io.write_csv(cfg.out / f"{tag}_{rel}.csv", rows, ["index"] + cfg.methods)
    return 0


def _grad_target(cfg):
    w, h = cfg.width, cfg.height
    if cfg.target_empty:
        return np.zeros((h, w))
    center = cfg.target_center or (w - w // 5, h // 2)
    if cfg.target == "pixel":
        target = np.zeros((h, w))
        target[center[1], center[0]] = 1.0
        return target
    radius = cfg.target_radius if cfg.target_radius is not None else min(w, h) / 20
    return make_disk(w, h, center, radius)


def cmd_grad(cfg):
    scene = cfg.scene()
    target = _grad_target(cfg)
    if not target.sum() > 0:
        raise ConfigError("target is empty: the relational score is undefined")
    mode, B = cfg.norm_mode, scene.kernel
    g_k = ds_dk(target, B, mode, cfg.threads)
    g_l = ds_dl(scene.source, target, B, mode, cfg.threads)

    rng = np.random.default_rng(cfg.seed)
    n_pix = scene.source.size
    if cfg.fd_samples == 0 or cfg.fd_samples >= n_pix:
        pixels = list(np.ndindex(scene.source.shape))
    else:
        flat = np.sort(rng.choice(n_pix, size=cfg.fd_samples, replace=False))
        pixels = [np.unravel_index(i, scene.source.shape) for i in flat]
    err_k = fd_check(lambda k: conv_score(k, target, B, mode, cfg.threads),
                     scene.source, g_k, cfg.fd_step, pixels)
    phi = compute_map(scene.source, B, cfg.method("conv"), cfg.threads)
    err_l = fd_check(lambda l: score(phi, l), target, g_l, cfg.fd_step)

    cfg.out.mkdir(parents=True, exist_ok=True)
    io.write_grid(cfg.out / f"dsdk_{cfg.relation}.grid", g_k)
    io.write_grid(cfg.out / f"dsdl_{cfg.relation}.grid", g_l)
    print(f"fd relative error ds_dk: {err_k!r}")
    print(f"fd relative error ds_dl: {err_l!r}")
    return 0


def cmd_bench(cfg):
    if cfg.bench == "sweep-p":
        records = []
        for n in cfg.sizes:
            scene = build_scene("right", n)
            records += sweep_p(scene.source, scene.kernel, cfg.p_values,
                               experiment=f"sweep-p/{n}", threads=cfg.threads)
        cfg.out.mkdir(parents=True, exist_ok=True)
        io.write_records(cfg.out / "sweep_p.csv", records)
    else:
        records = timing(cfg.sizes, TIMED_METHODS, cfg.p, cfg.repeats, cfg.warmup)
        cfg.out.mkdir(parents=True, exist_ok=True)
        io.write_records(cfg.out / "timing.csv", records)
    for r in records:
        print(f"{r.experiment} {r.method} {r.param:g} {r.metric:.6g}")
    return 0


COMMANDS = {"map": cmd_map, "heatmap": cmd_heatmap, "grad": cmd_grad, "bench": cmd_bench}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except NumericalFailureError as exc:
        print(f"relmap: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (RelmapError, ValueError) as exc:
        print(f"relmap: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
