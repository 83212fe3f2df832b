#!/usr/bin/env python3
"""
CLI Tool for Bulk Gallery Export
Writes every fixed gallery fixture as a document and verifies its pinned table
"""

import argparse
import json
import logging
import sys
from pathlib import Path

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from semitop.gallery.fixture_library import FixtureLibrary
from semitop.interchange import document as documents


def setup_logging(verbose: bool = False) -> None:
    """Setup logging configuration."""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(),
            logging.FileHandler('gallery_export.log')
        ]
    )


def export_gallery(output_dir: str, format_type: str = "json") -> int:
    """Export all fixed fixtures; returns the number of pinned mismatches."""
    library = FixtureLibrary()
    out = Path(output_dir)
    suffix = "yaml" if format_type == "yaml" else "json"
    mismatches = 0
    index = {}

    for name in library.list_fixtures():
        entry = library.get_entry(name)
        if entry.parametric:
            continue
        space = library.build(name)
        path = documents.save(space, out / f"{name}.{suffix}", fmt=format_type)
        problems = library.verify(name)
        mismatches += len(problems)
        index[name] = {'file': path.name, 'points': space.n, 'pinned': bool(entry.expected),
                       'verified': not problems}
        print(f"  {name:<24} -> {path}{'' if not problems else '  MISMATCH'}")

    with open(out / "index.json", 'w', encoding='utf-8') as f:
        json.dump(index, f, indent=2)
    print(f"Exported {len(index)} fixtures to {out}")
    return mismatches


def main() -> None:
    """Main CLI entry point."""
    parser = argparse.ArgumentParser(description="Export the semitopology fixture gallery")
    parser.add_argument('--output-dir', default='gallery_export',
                        help='Output directory for generated files')
    parser.add_argument('--format', choices=['json', 'yaml'], default='json',
                        help='Export format')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='Enable verbose logging')

    args = parser.parse_args()
    setup_logging(args.verbose)

    try:
        mismatches = export_gallery(args.output_dir, args.format)
    except KeyboardInterrupt:
        print("\nOperation cancelled by user")
        sys.exit(1)
    sys.exit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
