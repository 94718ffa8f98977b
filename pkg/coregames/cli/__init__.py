import os
from coregames.cli.base import CoreGamesBaseCommand
from coregames.constants import CoreGamesConstants as CC
from coregames.exceptions import InstanceError
from coregames.utils.config import CoreGamesConfig
from coregames.utils.logging_mixin import configure_logging

from argparse import ArgumentParser
from typing import List, Optional

# import all commands by walking through all files in this directory and
# importing all objects that are subclasses of CoreGamesBaseCommand
relevant_files = [
    f[:-3]
    for f in sorted(os.listdir(os.path.dirname(os.path.abspath(__file__))))
    if f.endswith(".py") and not f in ["__init__.py"]
]

command_list = {}

for py_file in relevant_files:
    mod = __import__(".".join([__name__, py_file]), fromlist=[py_file])
    classes = [getattr(mod, x) for x in dir(mod) if isinstance(getattr(mod, x), type)]
    for cls in classes:
        if issubclass(cls, CoreGamesBaseCommand) and not cls == CoreGamesBaseCommand:
            names = cls._NAMES
            if isinstance(names, str):
                names = [names]
            for name in names:
                command_list.update({name: cls})


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="coregames",
        description="Cores of simple games: compute, generate witnesses, verify.",
    )
    parser.add_argument("command", choices=sorted(command_list))
    parser.add_argument("document", nargs="?", help="instance document (JSON or YAML)")
    parser.add_argument("--agenda", help="comma separated labels, default: the document's")
    parser.add_argument("--mode", help="profile enumeration: " + "|".join(CC.MODES))
    parser.add_argument("--guard", type=int, help="largest number of blocks to enumerate")
    parser.add_argument("--jobs", type=int, help="worker threads")
    parser.add_argument("--config", help="YAML configuration file")
    parser.add_argument("--verbose", action="store_true", help="log at INFO level")
    parser.add_argument("--oracle", action="store_true", help="kappa: minimise over covers")
    parser.add_argument(
        "--cover-condition",
        action="store_true",
        help="verify-extended: check the cover condition instead",
    )
    parser.add_argument("--n-max", type=int, help="search: largest number of players")
    parser.add_argument("--m-max", type=int, help="search: largest agenda size")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    command_class = command_list[args.command]
    try:
        config = CoreGamesConfig.from_file(args.config).override(
            jobs=args.jobs, guard=args.guard, mode=args.mode
        )
        configure_logging("INFO" if args.verbose else config["log_level"])
    except InstanceError as e:
        print(CoreGamesBaseCommand.error_report(e))
        return CC.EXIT_VALIDATION
    except ValueError as e:
        print(CoreGamesBaseCommand.error_report(InstanceError(str(e), path="config/log_level")))
        return CC.EXIT_VALIDATION
    status, output = command_class(config).run(args)
    print(output)
    return status
