import acceptance_log


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, seconds, detail in sorted(acceptance_log.RESULTS):
        mark = "PASS" if ok else "FAIL"
        line = f"criterion {number}: {mark}  {title}  ({seconds:.2f} s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
