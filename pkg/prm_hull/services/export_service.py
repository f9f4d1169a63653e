from typing import List

from prm_hull.core import linalg
from prm_hull.core.gf import field_new
from prm_hull.core.monomial import E_set, IntervalParams

SELECTORS = ("G", "G1", "S", "P", "W", "E")


class ExportService:
    """Servicio para serializar matrices y familias de indices como texto"""

    def __init__(self, logger):
        self.logger = logger
        self.name = "Export_Service"

    def export(self, q: int, m: int, v: int, what: str) -> str:
        """
        Render one object for PRM(q, m, v) as deterministic text

        Args:
            q: Field order
            m: Projective dimension (G and G1 only)
            v: Degree; S, P, W and E need v in an open interval I_r
            what: One of SELECTORS

        Returns:
            Text ending in a newline, or the empty string for an empty matrix
        """
        if what not in SELECTORS:
            raise ValueError(f"unknown selector {what!r}, expected one of {', '.join(SELECTORS)}")
        F = field_new(q)
        point_id = f"q={q},m={m},v={v}"

        if what == "G":
            lines = self.matrix_lines(linalg.generator_matrix(F, m, v))
        elif what == "G1":
            lines = self.matrix_lines(linalg.full_monomial_matrix(F, m, v))
        else:
            P = IntervalParams.from_degree(q, v)
            if what == "S":
                lines = self.matrix_lines(linalg.support_block(F, P))
            elif what == "P":
                lines = self.matrix_lines(linalg.top_pairing_matrix(F, P))
            elif what == "W":
                lines = self.matrix_lines(linalg.working_block(F, P)[0])
            else:
                lines = [",".join(str(x) for x in a) for a in E_set(P)]

        self.logger.info(f"Exported {what}: {len(lines)} lines", logger_name=self.name, point_id=point_id)
        return "".join(line + "\n" for line in lines)

    @staticmethod
    def matrix_lines(M: linalg.MatrixFq) -> List[str]:
        return [" ".join(str(x) for x in row) for row in M.tolist()]
