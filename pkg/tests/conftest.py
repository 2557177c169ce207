from hypothesis import Phase, settings

# Examples are generator seeds, so shrinking them finds nothing smaller.
settings.register_profile("seeds", deadline=None, phases=(Phase.explicit, Phase.reuse, Phase.generate))
settings.load_profile("seeds")


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
