from app.logger.logger import setup_logger
from app.schemas.base import DefaultResponse
from app.schemas.wedge import WedgeVerifySchema
from app.wedge.square import prime_power_unit_check, tau_report, verify_psi_decomposition

logger = setup_logger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("wedge", help="wedge square of a rank 4 lattice")
    actions = parser.add_subparsers(dest="action", required=True)
    verify = actions.add_parser("verify", help="psi table, decomposition, cone effects and tau")
    verify.add_argument("--sign", type=int, choices=[1, -1], default=-1)
    verify.add_argument("--n", type=int, default=2, help="n of the tau lattice")
    verify.add_argument("--sweep", type=int, default=200, help="largest n of the unit check sweep")
    verify.set_defaults(handler=wedge_verify)


def wedge_verify(args) -> DefaultResponse:
    psi_report = verify_psi_decomposition()
    tau = tau_report(args.n, args.sign)
    witness = tau if args.sign == -1 else tau_report(args.n, -1)
    witness_holds = witness.in_W and not witness.in_N and witness.det * witness.chi == -1
    disagreements = [n for n in range(2, args.sweep + 1) if not prime_power_unit_check(n).agree]
    report = WedgeVerifySchema(
        psi=psi_report,
        tau=tau,
        unit_sweep_max=args.sweep,
        unit_sweep_agree=not disagreements,
        tau_witness_holds=witness_holds,
        unit_disagreements=disagreements,
    )
    ok = (
        psi_report.det_psi == -1
        and all(c.decomposition_holds for c in psi_report.conventions)
        and psi_report.block_structure.holds
        and psi_report.reverses_positive_cone
        and tau.det * tau.chi == -1
        and witness_holds
        and not disagreements
    )
    if not ok:
        logger.warning("Проверка wedge не пройдена")
        return DefaultResponse(error=True, message="Wedge verification failed", payload=report)
    return DefaultResponse(error=False, message="Wedge verification", payload=report)
