from simplicial_verify.complex import AnyComplex, SimplicialComplex
from simplicial_verify.complex.vectors import HVector
from simplicial_verify.decompose.partition import verify_partitioning
from simplicial_verify.decompose.schemas import Partitioning, ShellingOrder
from simplicial_verify.decompose.shelling import verify_shelling
from simplicial_verify.errors import MalformedCertificateError


def _validate(cert: ShellingOrder | Partitioning, complex_: AnyComplex | None) -> None:
    if isinstance(cert, ShellingOrder):
        target = complex_ if complex_ is not None else SimplicialComplex.from_facets(cert.order)
        if not isinstance(target, SimplicialComplex):
            msg = "Shellings are only defined for absolute complexes"
            raise MalformedCertificateError(msg)
        result = verify_shelling(target, cert.order)
        if not result.holds or result.certificate is None:
            msg = f"Invalid shelling: {result.violation}"
            raise MalformedCertificateError(msg)
        if result.certificate.restrictions != cert.restrictions:
            msg = "Shelling restriction faces do not match the facet order"
            raise MalformedCertificateError(msg)
    elif complex_ is not None:
        result = verify_partitioning(complex_, cert)
        if not result.holds:
            msg = f"Invalid partitioning: {result.violation}"
            raise MalformedCertificateError(msg)


def h_from_restrictions(
    cert: ShellingOrder | Partitioning, complex_: AnyComplex | None = None
) -> HVector:
    """
    h_k = #{j : |R_j| = k}, padded to length d+2.

    The certificate is validated against ``complex_`` when given; a shelling is
    always checked against the complex generated by its own facets.
    """
    _validate(cert, complex_)
    if isinstance(cert, ShellingOrder):
        bottoms, tops = cert.restrictions, cert.order
    else:
        bottoms, tops = cert.restrictions, cert.tops
    d = max((f.dimension for f in tops), default=-1)
    if complex_ is not None:
        d = max(d, complex_.dimension)
    h = [0] * (d + 2)
    for r in bottoms:
        h[len(r)] += 1
    return HVector(tuple(h))
