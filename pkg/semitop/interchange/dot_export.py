"""
Graphviz export
Points coloured by regularity, generators as boxes, maximal topens as dashed hulls
"""

import logging
from typing import Dict, Optional

from semitop.topology.classification import Classification, classify_all
from semitop.topology.relations import maximal_topen_partition
from semitop.topology.semitopology import SemiTopology

logger = logging.getLogger(__name__)


def _quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def as_graphviz(space: SemiTopology, palette: Optional[Dict[str, str]] = None,
                table: Optional[Classification] = None) -> str:
    """
    Render a space as graphviz source.

    Save the output as ``space.dot`` and run ``dot -Tpng space.dot > space.png``.
    """
    if palette is None:
        from semitop.config import get_settings
        palette = get_settings().dot_palette
    table = table or classify_all(space)
    partition = maximal_topen_partition(space)

    lines = ['graph {', 'graph [rankdir=LR];']
    append = lines.append

    def point(p: int) -> str:
        return _quote(f"p:{space.labels[p]}")

    for i, topen in enumerate(partition.topens):
        append(f'subgraph cluster_topen_{i} {{')
        append(f'  style=dashed label={_quote("topen " + space.format_set(topen))}')
        for p in topen:
            append(f'  {point(p)}')
        append('}')

    append('node [fontname=Arial shape=circle penwidth=2 style=filled]')
    for row in table:
        colour = palette.get(row.level.value, '#FFFFFF')
        border = 'color="#B03A2E"' if row.conflicted else 'color="#708BA6"'
        append(f'{point(row.point)} [label={_quote(space.labels[row.point])} '
               f'fillcolor="{colour}" {border}]')

    append('node [shape=box penwidth=1 style=solid fontsize=10]')
    for i, generator in enumerate(space.basis):
        name = _quote(f"g:{i}")
        append(f'{name} [label={_quote(space.format_set(generator))}]')
        for p in generator:
            append(f'{name} -- {point(p)}')

    append('}')
    logger.debug(f"Rendered {space.name or 'space'} with {len(space.basis)} generators "
                 f"and {len(partition.topens)} topen hulls")
    return '\n'.join(lines) + '\n'
