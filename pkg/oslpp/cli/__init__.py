from oslpp.cli.main import main
