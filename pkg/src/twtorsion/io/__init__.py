"""Job files, certificates, the search driver and the command line."""
from .certificates import (
    CertificateError,
    TorsionCertificate,
    certify,
    emit_certificate,
    parse_certificate,
    verify_certificate,
)
from .jobs import JobError, JobSpec, RepSpec, SearchSpec, build_cyclic, build_representation, format_job, parse_job
from .search import SearchResult, SearchRow, format_table, run_search
