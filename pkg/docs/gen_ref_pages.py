"""Generate mkdocstrings pages for every public module of aalpha_spectra."""

from __future__ import annotations

from pathlib import Path

import mkdocs_gen_files

PACKAGE_ROOT = Path("src")
PACKAGE = PACKAGE_ROOT / "aalpha_spectra"

nav = mkdocs_gen_files.Nav()

for source in sorted(PACKAGE.rglob("*.py")):
    module = source.relative_to(PACKAGE_ROOT).with_suffix("")
    parts = tuple(module.parts)
    if parts[-1] == "__main__":
        continue
    if parts[-1] == "__init__":
        # Packages get an index page named after the package itself.
        parts = parts[:-1]
        page = Path(*parts, "index.md")
    elif parts[-1].startswith("_"):
        continue
    else:
        page = module.with_suffix(".md")

    nav[parts] = page.as_posix()
    with mkdocs_gen_files.open(Path("reference", page), "w") as handle:
        handle.write(f"# `{'.'.join(parts)}`\n\n::: {'.'.join(parts)}\n")
    mkdocs_gen_files.set_edit_path(Path("reference", page), source)

with mkdocs_gen_files.open("reference/SUMMARY.md", "w") as summary:
    summary.writelines(nav.build_literate_nav())

__description__ = """
Build the API reference tree for the aalpha_spectra package and its core subpackage.
"""
