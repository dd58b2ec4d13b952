"""Hasse diagrams of subgroup lattices: DOT export and terminal view."""

from typing import List, Optional

from rich.console import Console
from rich.tree import Tree

from ..characters.dual import CharacterTable, CharSet
from ..groups.lattice import SubgroupLattice
from ..transfer.systems import TransferSystem

console = Console()


def _covers(lattice: SubgroupLattice) -> List[tuple]:
    return sorted((k, h) for h in range(len(lattice)) for k in lattice.maximal_subgroups(h))


def export_dot(lattice: SubgroupLattice, system: Optional[TransferSystem] = None,
               table: Optional[CharacterTable] = None, universe: Optional[CharSet] = None) -> str:
    """DOT text for the Hasse diagram, with the strict edges of ``system`` highlighted.

    Covers are solid black; transfer edges are red and dashed and do not
    constrain the layout. With a universe, each node shows |restriction of U|.
    Output is sorted and byte-stable.
    """
    if universe is not None and table is None:
        table = CharacterTable(lattice)
    lines = [
        "digraph Sub {",
        f'    label="{lattice.group.label}";',
        "    rankdir=BT;",
        "    node [shape=box, fontname=Helvetica];",
    ]
    for order in sorted(set(int(o) for o in lattice.orders)):
        members = " ".join(f"H{h};" for h in lattice.layer(order))
        lines.append(f"    {{ rank=same; {members} }}")
    for sub in lattice:
        label = f"#{sub.id}\\n|H|={sub.order}"
        if universe is not None:
            restricted = table.restrict_bits(universe.bits, lattice.top, sub.id)
            label += f"\\n|U|={restricted.bit_count()}"
        lines.append(f'    H{sub.id} [label="{label}"];')
    for k, h in _covers(lattice):
        lines.append(f"    H{k} -> H{h} [color=black];")
    if system is not None:
        for k, h in system.sorted_edges():
            lines.append(f"    H{k} -> H{h} [color=red, style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def show_lattice(lattice: SubgroupLattice, system: Optional[TransferSystem] = None, console_output: bool = True) -> Tree:
    """Subgroups by order as a rich tree, with each subgroup's covers and incoming transfers."""
    tree = Tree(f"Sub({lattice.group.label}): {len(lattice)} subgroups", style="bold cyan")
    for order in sorted(set(int(o) for o in lattice.orders)):
        layer = tree.add(f"|H| = {order}")
        for h in lattice.layer(order):
            node = layer.add(f"#{h} generated by {[list(g) for g in lattice[h].generators]}")
            covers = lattice.maximal_subgroups(h)
            if covers:
                node.add(f"covers {covers}")
            if system is not None:
                sources = sorted(k for k, t in system.edges if t == h)
                if sources:
                    node.add(f"[red]transfers from {sources}[/red]")
    if console_output:
        console.print(tree)
    return tree
