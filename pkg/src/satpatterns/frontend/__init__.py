from .dimacs import emit_dimacs, parse_dimacs, read_dimacs
from .formula import format_formula, parse_formula, read_formula
from .report import emit_report, instance_id, report_line, write_report
