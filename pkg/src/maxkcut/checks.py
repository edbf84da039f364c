"""Oracle comparison suites shared by the CLI and the tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ansatz.mixers import LX_TERMS, grover_block, mixer_lx
from .ansatz.preps import SUBSPACE_K, prepare_subspace, uniform_subspace_state
from .ansatz.separators import phase_separator, phase_separator_oracle, supported_separators
from .ansatz.validation import validate_mixer
from .circuit import unitary
from .coloring import relation_for
from .statevector import run


@dataclass
class CheckResult:
    suite: str
    name: str
    deviation: float
    passed: bool
    detail: str = ""


def check_separators(k_values=range(2, 10), trials: int = 20, tol: float = 1e-9,
                     seed: int = 2024) -> list[CheckResult]:
    """Circuit unitary against the diagonal oracle at random angles."""
    rng = np.random.Generator(np.random.PCG64(seed))
    out = []
    for k, variant in supported_separators(k_values):
        rel = relation_for(k, variant)
        worst, where = 0.0, ""
        for t in rng.uniform(-2 * np.pi, 2 * np.pi, trials):
            u = unitary(phase_separator(k, variant, t))
            target = np.diag(phase_separator_oracle(rel, t))
            dev = np.abs(u - target)
            idx = np.unravel_index(int(np.argmax(dev)), dev.shape)
            if dev[idx] > worst:
                n = int(np.log2(u.shape[0]))
                worst = float(dev[idx])
                where = f"t={t:.12g}, basis {format(idx[1], f'0{n}b')}->{format(idx[0], f'0{n}b')}"
        out.append(CheckResult("separators", f"k={k} {variant}", worst, worst < tol, where))
    return out


def check_preps(k_values=SUBSPACE_K, tol: float = 1e-10) -> list[CheckResult]:
    out = []
    for k in k_values:
        psi = run(prepare_subspace(k))
        mag = np.abs(np.abs(psi) - np.abs(uniform_subspace_state(k))).max()
        exact = np.abs(psi - uniform_subspace_state(k)).max()
        out.append(CheckResult("preps", f"k={k}", float(max(mag, exact)), bool(max(mag, exact) < tol),
                               f"magnitude {mag:.3g}, real-positive {exact:.3g}"))
    return out


def check_mixers(k_values=tuple(LX_TERMS), tol: float = 1e-10) -> list[CheckResult]:
    out = []
    for k in k_values:
        for name, build in (
            ("LX", lambda b, k=k: mixer_lx(k, b)),
            ("Grover-box", lambda b, k=k: grover_block(prepare_subspace(k), b)),
        ):
            rep = validate_mixer(build, range(k), leak_tol=tol)
            detail = f"leak {rep.max_leak:.3g}, components {rep.components}"
            out.append(CheckResult("mixers", f"{name} k={k}", rep.max_leak, rep.ok, detail))
        for beta in (0.3, 1.7):
            u = unitary(grover_block(prepare_subspace(k), beta))
            f = np.zeros(u.shape[0], dtype=complex)
            f[:k] = 1 / np.sqrt(k)
            target = np.eye(u.shape[0]) - (1 - np.exp(-1j * beta)) * np.outer(f, f)
            dev = float(np.abs(u - target).max())
            out.append(CheckResult("mixers", f"Grover identity k={k} beta={beta}", dev, dev < 1e-10))
    return out


SUITES = {"separators": check_separators, "mixers": check_mixers, "preps": check_preps}


def run_suites(scope: str = "all") -> list[CheckResult]:
    names = list(SUITES) if scope == "all" else [scope]
    results = []
    for name in names:
        results.extend(SUITES[name]())
    return results
