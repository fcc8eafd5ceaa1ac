from app.cli.commands import density, embed, lattice, orbits, selftest, wedge

COMMANDS = [lattice, orbits, embed, density, wedge, selftest]
