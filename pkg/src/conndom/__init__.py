"""Exact domination and connected domination in forbidden-induced-subgraph classes."""

from .construct import (
    ConstructionTrace,
    StructuredCDS,
    build_connector,
    find_structured_cds,
    seinsche_split,
    shrink_c6,
    theorem2_pipeline,
    theorem3_pipeline,
)
from .detect import (
    ClassSpec,
    FreenessWitness,
    contains_induced,
    find_induced_cycle,
    find_induced_path,
    is_member,
    parse_class_spec,
    verify_witness,
)
from .errors import BudgetExceeded, ClassViolation, ContractViolation, DefectError
from .families import FamilyId, gen_cycle, gen_F, gen_G, gen_H, gen_path, gen_pattern_H, parse_family
from .graph import (
    EdgeListError,
    Graph,
    Graph6Error,
    VertexSet,
    complement,
    components,
    is_connected_induced,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .harness import CheckReport, LabeledCorpus, Violation, enumerate_connected, family_report, ingest_graph6_stream, run_check
from .solve import (
    DominationCertificate,
    duchet_meyniel_check,
    gamma,
    gamma_c,
    gamma_c_value,
    gamma_value,
    is_cds,
    is_dominating,
    minimalize_cds,
    minimalize_connector,
)

__version__ = "0.1.0"
