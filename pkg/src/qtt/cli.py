"""Command-line front-end: qtt run | list | check."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .sweep import SweepConfig, list_scenarios, load_config, run_scenario


def _cmd_list(_args) -> int:
    print(json.dumps(list_scenarios(), indent=2))
    return 0


def _cmd_run(args) -> int:
    names = {s["name"] for s in list_scenarios()}
    if args.scenario not in names:
        print(f"unknown scenario {args.scenario!r}; see `qtt list`", file=sys.stderr)
        return 2
    if args.config:
        cfg = load_config(Path(args.config), args.scenario)
    else:
        cfg = SweepConfig(scenario=args.scenario)
    if args.seed is not None:
        cfg.master_seed = args.seed
    if args.out is not None:
        cfg.out_dir = Path(args.out)
    if args.jobs is not None:
        cfg.jobs = args.jobs
    result = run_scenario(cfg)
    print(json.dumps(result, indent=2))
    return 0


def _cmd_check(_args) -> int:
    """Fast invariant suite over the default model."""
    from .model import (
        CouplingConfig, TransistorModel, build_hamiltonian, bohr_spectrum,
        gibbs_state, jump_operators, master_rhs,
    )
    from .dynamics import steady_state
    from .observables import five_point_derivative, heat_currents

    failures = 0

    def check(name: str, ok: bool):
        nonlocal failures
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1

    h = build_hamiltonian(CouplingConfig())
    check("diagonal energies (1,0,-1,0,0,-1,0,1)",
          np.allclose(h.diag, [1, 0, -1, 0, 0, -1, 0, 1]))

    n_pairs = sum(len(g.pairs) for x in "ABC" for g in bohr_spectrum(h, x))
    check("12 single-flip transitions in total", n_pairs == 12)

    model = TransistorModel.default()
    for op in (op for x in "ABC" for op in model.jump_operators(x)):
        a = op.matrix()
        comm = h.matrix() @ a - a @ h.matrix()
        if np.abs(comm + op.frequency * a).max() > 1e-12:
            check("eigenoperator identity [H, A] = -wA", False)
            break
    else:
        check("eigenoperator identity [H, A] = -wA", True)

    rng = np.random.default_rng(0)
    m = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    rho = m @ m.conj().T
    rho /= np.trace(rho).real
    rhs = master_rhs(model, rho)
    check("master_rhs traceless", abs(np.trace(rhs)) <= 1e-12)
    check("master_rhs Hermiticity-preserving",
          np.abs(rhs - rhs.conj().T).max() <= 1e-12)

    eq = TransistorModel.default(t_a=0.2, t_b=0.2, t_c=0.2)
    gibbs = gibbs_state(h, 0.2)
    check("Gibbs fixed point at equal temperatures",
          np.abs(master_rhs(eq, gibbs)).max() <= 1e-10)

    rho_ss = steady_state(model)
    check("steady-state heat currents sum to zero",
          abs(heat_currents(model, rho_ss).total) <= 1e-10)

    check("five-point stencil exact on x^4",
          abs(five_point_derivative(lambda x: x ** 4, 0.3, 1e-3) - 0.108) <= 1e-12)

    print(f"{'OK' if failures == 0 else f'{failures} check(s) failed'}")
    return 0 if failures == 0 else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="qtt",
                                     description="quantum thermal transistor sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a canned scenario")
    p_run.add_argument("scenario")
    p_run.add_argument("--config", help="INI file with key = value overrides")
    p_run.add_argument("--seed", type=int, help="master seed")
    p_run.add_argument("--out", help="output directory")
    p_run.add_argument("--jobs", type=int, help="parallel worker count")
    p_run.set_defaults(func=_cmd_run)

    p_list = sub.add_parser("list", help="print the scenario catalog")
    p_list.set_defaults(func=_cmd_list)

    p_check = sub.add_parser("check", help="run the invariant suite")
    p_check.set_defaults(func=_cmd_check)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
