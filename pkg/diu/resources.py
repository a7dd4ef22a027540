# Functional-unit model of the standalone and unified datapaths.
#
# Counts come from the step dataflow graphs, not from synthesis:
#   MD5 step      B + rotl(A + F(B,C,D) + X + T, s)         -> 4 adders, 1 variable rotator
#   SHA-192 step  TEMP1 = S5(A) + f + E + W + K; TEMP2 = TEMP1 + A + F
#                                                            -> 6 adders, S5/S30/S15
# The unified core shares all six adders and lets the variable rotator serve S5.

from __future__ import annotations

from dataclasses import asdict, dataclass

import pandas as pd

UNIT_KINDS = (
    "modular_adders",
    "fixed_rotators",
    "variable_rotators",
    "nonlinear_units",
    "registers_32bit",
)
CONFIGURATIONS = ("md5", "sha192", "unified")


@dataclass(frozen=True)
class ResourceRow:
    # Unit counts for one datapath configuration.

    configuration: str
    modular_adders: int
    fixed_rotators: int
    variable_rotators: int
    nonlinear_units: int
    registers_32bit: int
    mode_muxes: int = 0
    steps_per_block: int = 0

    @property
    def units(self) -> dict[str, int]:
        return {kind: getattr(self, kind) for kind in UNIT_KINDS}

    @property
    def total_units(self) -> int:
        return sum(self.units.values())

    @property
    def area_step_product(self) -> int:
        return self.total_units * self.steps_per_block

    def __add__(self, other: "ResourceRow") -> "ResourceRow":
        # Two standalone engines side by side.
        return ResourceRow(
            configuration=f"{self.configuration}+{other.configuration}",
            mode_muxes=self.mode_muxes + other.mode_muxes,
            steps_per_block=0,
            **{kind: getattr(self, kind) + getattr(other, kind) for kind in UNIT_KINDS},
        )


@dataclass(frozen=True)
class ResourceReport:
    md5: ResourceRow
    sha192: ResourceRow
    unified: ResourceRow

    @property
    def rows(self) -> tuple[ResourceRow, ResourceRow, ResourceRow]:
        return self.md5, self.sha192, self.unified

    @property
    def standalone(self) -> ResourceRow:
        return self.md5 + self.sha192

    @property
    def standalone_area_step_product(self) -> int:
        return self.md5.area_step_product + self.sha192.area_step_product

    def unified_saves_units(self) -> bool:
        # Element-wise <= with a strictly smaller total.
        both = self.standalone
        elementwise = all(getattr(self.unified, k) <= getattr(both, k) for k in UNIT_KINDS)
        return elementwise and self.unified.total_units < both.total_units

    def table(self) -> pd.DataFrame:
        rows = {}
        for row in self.rows:
            counts = row.units
            counts["mode_muxes"] = row.mode_muxes
            counts["total_units"] = row.total_units
            counts["area_step_product"] = row.area_step_product
            rows[row.configuration] = counts
        return pd.DataFrame(rows)[list(CONFIGURATIONS)]

    def lines(self) -> list[str]:
        df = self.table()
        out = [
            f"{kind}: " + " ".join(f"{cfg}={int(df.at[kind, cfg])}" for cfg in CONFIGURATIONS)
            for kind in df.index
        ]
        out.append(f"unified_saves_units: {str(self.unified_saves_units()).lower()}")
        return out

    def to_dict(self) -> dict:
        return {row.configuration: asdict(row) for row in self.rows}


MD5_ONLY = ResourceRow(
    configuration="md5",
    modular_adders=4,
    fixed_rotators=0,
    variable_rotators=1,
    nonlinear_units=1,
    registers_32bit=4,
    steps_per_block=64,
)

SHA192_ONLY = ResourceRow(
    configuration="sha192",
    modular_adders=6,
    fixed_rotators=3,  # S5, S30, S15
    variable_rotators=0,
    nonlinear_units=1,
    registers_32bit=6,
    steps_per_block=80,
)

UNIFIED = ResourceRow(
    configuration="unified",
    modular_adders=6,
    fixed_rotators=2,  # S30, S15
    variable_rotators=1,
    nonlinear_units=1,
    registers_32bit=6,
    # lanes B..E next-value select, plus function, constant and message-word source selects
    mode_muxes=7,
    steps_per_block=80,
)


def resource_report() -> ResourceReport:
    return ResourceReport(md5=MD5_ONLY, sha192=SHA192_ONLY, unified=UNIFIED)
