#!/usr/bin/env python3
"""Scenario calibration harness.

Generates candidate scenario geometries, runs full campaigns over all four
planners, and reports the statistics the shipped scenarios must exhibit:
short-path fractions (NCRRT strictly largest, with margin), mean successful
path length (NCRRT smallest), and the NCRRT/basic wall-time ratio (≤ 2.0).

Usage:
  python3 scripts/calibrate.py                # evaluate all candidates, 60 trials
  python3 scripts/calibrate.py --full         # 100 trials, 3 base seeds
  python3 scripts/calibrate.py --only s1      # single scenario family
  python3 scripts/calibrate.py --write        # freeze winning configs to JSON
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from rrtkit import (
    PlannerParams,
    RngStream,
    is_narrow,
    random_state,
    run_campaign,
    scenario_from_dict,
)

PARAMS = PlannerParams()  # Table-style defaults: step 20, cap 1500, delta 2
PLANNERS = ("basic", "goalbias", "goalzoom", "ncrrt")
SCENARIO_DIR = Path(__file__).resolve().parent.parent / "src" / "rrtkit" / "scenarios"


# --------------------------------------------------------------- geometry kit


def vwall_with_slot(x0, thick, y_lo, y_hi, slot_y0, slot_w):
    """Vertical wall from y_lo..y_hi with a free slot [slot_y0, slot_y0+slot_w)."""
    rects = []
    if slot_y0 > y_lo:
        rects.append([x0, y_lo, x0 + thick, slot_y0])
    if slot_y0 + slot_w < y_hi:
        rects.append([x0, slot_y0 + slot_w, x0 + thick, y_hi])
    return rects


def block_grid(x0, y0, nx, ny, block, gap):
    """nx × ny square blocks separated by `gap`-wide streets (narrow texture)."""
    rects = []
    for i in range(nx):
        for j in range(ny):
            bx = x0 + i * (block + gap)
            by = y0 + j * (block + gap)
            rects.append([bx, by, bx + block, by + block])
    return rects


def make_scenario(name, obstacles, start=(60, 250), goal=(440, 250), threshold=None):
    doc = {
        "name": name,
        "bounds": [0, 0, 500, 500],
        "obstacles": [list(map(float, o)) for o in obstacles],
        "start": list(map(float, start)),
        "goal": list(map(float, goal)),
    }
    if threshold is not None:
        doc["short_path_threshold"] = float(threshold)
    return doc


# ------------------------------------------------------------ candidate maps
#
# Architectures under evaluation.  The guiding principle, learned from the
# first sweep: narrow texture must lie ON the short route (funnels, slot
# tubes, inter-wall corridors), because the narrow sampler distributes its
# picks uniformly over all narrow area — off-route texture dilutes the bias.


def arch_single_wall(name, slot_w, slot_y0, thick=30.0, gap_lo=40.0, stubs=0.0):
    """One vertical wall, offset slot, open band below as the broad detour.

    `stubs` > 0 adds two horizontal bars on each side of the wall framing the
    slot approach: a funnel pocket that concentrates narrow area at the slot.
    """
    obstacles = vwall_with_slot(235, thick, gap_lo, 500, slot_y0, slot_w)
    if stubs:
        margin = 14.0  # pocket half-height above/below the slot
        for x0, x1 in ((235 - stubs, 235), (235 + thick, 235 + thick + stubs)):
            obstacles.append([x0, slot_y0 - margin - 8, x1, slot_y0 - margin])
            obstacles.append([x0, slot_y0 + slot_w + margin, x1, slot_y0 + slot_w + margin + 8])
    return make_scenario(name, obstacles, start=(60, 250), goal=(440, 250))


def arch_twin_rib(name, corridor_w, door_w, door_a_y0, door_b_y0, thick=24.0, gap_lo=55.0):
    """Two parallel ribs with a narrow corridor between them.

    The short route threads door A (left rib), travels the inter-rib corridor
    vertically, and exits door B (right rib).  The corridor interior is
    entirely narrow, so the bias concentrates exactly on the route.  The broad
    detour dives under both ribs through the open band y < gap_lo.
    """
    xa = 250.0 - corridor_w / 2 - thick
    xb = 250.0 + corridor_w / 2
    obstacles = vwall_with_slot(xa, thick, gap_lo, 500, door_a_y0, door_w)
    obstacles += vwall_with_slot(xb, thick, gap_lo, 500, door_b_y0, door_w)
    return make_scenario(name, obstacles, start=(60, 250), goal=(440, 250))


def carve_rect(obstacles, hole):
    """Subtract an axis-aligned hole from every obstacle in the list.

    Each obstacle intersecting the hole is split into up to four remainder
    strips (left/right of the hole, then below/above within its x-overlap).
    Exact rectangle arithmetic; obstacles outside the hole pass through.
    """
    hx0, hy0, hx1, hy1 = hole
    out = []
    for x0, y0, x1, y1 in obstacles:
        if x1 <= hx0 or x0 >= hx1 or y1 <= hy0 or y0 >= hy1:
            out.append([x0, y0, x1, y1])
            continue
        if x0 < hx0:
            out.append([x0, y0, hx0, y1])
        if x1 > hx1:
            out.append([hx1, y0, x1, y1])
        mx0, mx1 = max(x0, hx0), min(x1, hx1)
        if y0 < hy0:
            out.append([mx0, y0, mx1, hy0])
        if y1 > hy1:
            out.append([mx0, hy1, mx1, y1])
    return out


def make_baffles(x0, x1, band_h, n, gap, pitch=30.0, style="alt"):
    """Teeth at fixed pitch, centered under [x0, x1].

    style="alt": alternating floor/ceiling teeth; each leaves a `gap` opening
    on the opposite side, forcing the band crossing into an S-serpentine.
    style="ceil": all teeth hang from the band ceiling, leaving a continuous
    floor channel of height `gap`; the crossing is straight but must be
    discovered by samples landing inside the channel.
    """
    if not n:
        return []
    mid = (x0 + x1) / 2
    left = mid - (pitch * (n - 1) + 14) / 2
    teeth = []
    for i in range(n):
        bx = left + i * pitch
        if style == "ceil" or i % 2 == 1:
            teeth.append([bx, gap, bx + 14, band_h])
        else:
            teeth.append([bx, 0.0, bx + 14, band_h - gap])
    return teeth


def arch_double_gallery(
    name,
    entry_top=330.0,
    entry_bot=170.0,
    exit_top=230.0,
    exit_bot=270.0,
    corridor_w=16.0,
    block=(130.0, 280.0),
    band_h=55.0,
    leg1_frac=0.55,
    n_baffles=3,
    baffle_gap=22.0,
    world=400.0,
    start=(40.0, 310.0),
    goal=(360.0, 310.0),
):
    """A thick block pierced by two entries and two exits joined by one
    buried vertical gallery: twice the threadable narrow area of a single
    corridor at the same per-route depth."""
    x0, x1 = block
    w = corridor_w
    h = w / 2
    vx1 = x0 + leg1_frac * (x1 - x0)
    vx0 = vx1 - w
    g0 = min(entry_bot, exit_top, exit_bot) - h
    g1 = max(entry_top, exit_top, exit_bot) + h
    obstacles = []
    for sx0, sx1, holes in (
        (x0, vx0, [(entry_bot - h, entry_bot + h), (entry_top - h, entry_top + h)]),
        (vx0, vx1, [(g0, g1)]),
        (vx1, x1, [(exit_top - h, exit_top + h), (exit_bot - h, exit_bot + h)]),
    ):
        y = band_h
        for h0, h1 in sorted(holes):
            if h0 > y:
                obstacles.append([sx0, y, sx1, h0])
            y = max(y, h1)
        if y < world:
            obstacles.append([sx0, y, sx1, world])
    obstacles.extend(make_baffles(x0, x1, band_h, n_baffles, baffle_gap))
    return make_scenario(name, obstacles, start=start, goal=goal) | {
        "bounds": [0.0, 0.0, world, world]
    }


def arch_top_entry(
    name,
    desc_x=180.0,
    horiz_y=236.0,
    corridor_w=16.0,
    block=(110.0, 310.0),
    block_top=356.0,
    band_h=55.0,
    n_baffles=4,
    baffle_gap=22.0,
    world=400.0,
    start=(40.0, 310.0),
    goal=(360.0, 310.0),
):
    """A thick block whose narrow corridor enters from a dead-end pocket on
    top and descends vertically before turning to the right face.

    The pocket (between block top and the world edge, sealed on the right)
    is reachable only from the start side. The descent runs perpendicular to
    the start-goal axis, so pulls toward the goal press into the corridor
    wall instead of advancing; only samples landing inside the descent
    thread it. The bottom band detour is slowed by a baffle serpentine.
    """
    x0, x1 = block
    w = corridor_w
    dx0, dx1 = desc_x - w / 2, desc_x + w / 2
    hy0, hy1 = horiz_y - w / 2, horiz_y + w / 2
    obstacles = [
        [x0, band_h, dx0, block_top],
        [dx0, band_h, dx1, hy0],
        [dx1, band_h, x1, hy0],
        [dx1, hy1, x1, block_top],
        [x1, block_top, world, world],
    ]
    obstacles.extend(make_baffles(x0, x1, band_h, n_baffles, baffle_gap))
    return make_scenario(name, obstacles, start=start, goal=goal) | {
        "bounds": [0.0, 0.0, world, world]
    }


def arch_pierced_block(
    name,
    entry_y,
    drop,
    corridor_w=16.0,
    block=(150.0, 270.0),
    band_h=55.0,
    leg1_frac=0.6,
    n_baffles=2,
    baffle_gap=20.0,
    world=400.0,
    start=(40.0, 310.0),
    goal=(360.0, 310.0),
    extra=(),
):
    """A thick solid block pierced by an S-shaped narrow corridor.

    The corridor enters the left face at `entry_y`, runs horizontally, drops
    by `drop` through a vertical leg buried deep inside the block, and exits
    the right face.  The bends defeat straight-line extensions, and the thick
    walls keep corridor samples from being captured by tree nodes outside, so
    only a sampler that repeatedly lands inside the corridor threads it.
    The broad detour crosses the band y < band_h, slowed by two baffles that
    force an S-wiggle there.
    """
    x0, x1 = block
    w = corridor_w
    vx1 = x0 + leg1_frac * (x1 - x0)
    vx0 = vx1 - w
    e0, e1 = entry_y - w / 2, entry_y + w / 2
    exit_y = entry_y - drop
    o0, o1 = exit_y - w / 2, exit_y + w / 2
    lo, hi = min(e0, o0), max(e1, o1)
    obstacles = []
    for sx0, sx1, holes in (
        (x0, vx0, [(e0, e1)]),
        (vx0, vx1, [(lo, hi)]),
        (vx1, x1, [(o0, o1)]),
    ):
        y = band_h
        for h0, h1 in sorted(holes):
            if h0 > y:
                obstacles.append([sx0, y, sx1, h0])
            y = max(y, h1)
        if y < world:
            obstacles.append([sx0, y, sx1, world])
    obstacles.extend(make_baffles(x0, x1, band_h, n_baffles, baffle_gap))
    obstacles.extend(list(o) for o in extra)
    return make_scenario(name, obstacles, start=start, goal=goal) | {
        "bounds": [0.0, 0.0, world, world]
    }


def arch_jmouth_block(
    name,
    entry_y,
    rise,
    drop,
    fall,
    corridor_w=16.0,
    face_t=24.0,
    block=(110.0, 310.0),
    band_h=55.0,
    leg1_frac=0.5,
    drop2=None,
    leg2_frac=0.75,
    n_baffles=3,
    baffle_gap=22.0,
    baffle_style="alt",
    baffle_pitch=30.0,
    world=400.0,
    start=(40.0, 310.0),
    goal=(360.0, 310.0),
    extra=(),
    holes=(),
):
    """A thick block pierced by a corridor whose face openings are J-mouths.

    The corridor: horizontal slot through the left face wall, vertical shaft
    rising `rise` behind it, horizontal leg, central drop of `drop`, second
    leg, vertical shaft falling `fall`, slot out the right face.  Every pull
    toward the goal is horizontal, so it rails only along the short legs and
    stalls at each vertical jog; the jogs can only be climbed by samples
    landing inside them.  The broad detour crosses the baffled band below.
    """
    x0, x1 = block
    w = corridor_w
    t = face_t
    ey0, ey1 = entry_y - w / 2, entry_y + w / 2
    l1 = entry_y + rise
    l1y0, l1y1 = l1 - w / 2, l1 + w / 2
    l2 = l1 - drop
    l2y0, l2y1 = l2 - w / 2, l2 + w / 2
    oy = l2 - fall
    oy0, oy1 = oy - w / 2, oy + w / 2
    inner0, inner1 = x0 + t + w, x1 - t - w
    vx1 = inner0 + leg1_frac * (inner1 - inner0)
    vx0 = vx1 - w
    if drop2 is None:
        slabs = (
            (x0, x0 + t, ey0, ey1),                                    # entry slot
            (x0 + t, inner0, min(ey0, l1y0), max(ey1, l1y1)),          # left shaft
            (inner0, vx0, l1y0, l1y1),                                 # leg 1
            (vx0, vx1, min(l1y0, l2y0), max(l1y1, l2y1)),              # central jog
            (vx1, inner1, l2y0, l2y1),                                 # leg 2
            (inner1, x1 - t, min(l2y0, oy0), max(l2y1, oy1)),          # right shaft
            (x1 - t, x1, oy0, oy1),                                    # exit slot
        )
    else:
        l3 = l2 - drop2
        l3y0, l3y1 = l3 - w / 2, l3 + w / 2
        oy = l3 - fall
        oy0, oy1 = oy - w / 2, oy + w / 2
        ux1 = inner0 + leg2_frac * (inner1 - inner0)
        ux0 = ux1 - w
        slabs = (
            (x0, x0 + t, ey0, ey1),                                    # entry slot
            (x0 + t, inner0, min(ey0, l1y0), max(ey1, l1y1)),          # left shaft
            (inner0, vx0, l1y0, l1y1),                                 # leg 1
            (vx0, vx1, min(l1y0, l2y0), max(l1y1, l2y1)),              # jog A
            (vx1, ux0, l2y0, l2y1),                                    # leg 2
            (ux0, ux1, min(l2y0, l3y0), max(l2y1, l3y1)),              # jog B
            (ux1, inner1, l3y0, l3y1),                                 # leg 3
            (inner1, x1 - t, min(l3y0, oy0), max(l3y1, oy1)),          # right shaft
            (x1 - t, x1, oy0, oy1),                                    # exit slot
        )
    obstacles = []
    for sx0, sx1, f0, f1 in slabs:
        if f0 > band_h:
            obstacles.append([sx0, band_h, sx1, f0])
        if f1 < world:
            obstacles.append([sx0, f1, sx1, world])
    obstacles.extend(make_baffles(x0, x1, band_h, n_baffles, baffle_gap, pitch=baffle_pitch, style=baffle_style))
    obstacles.extend(list(o) for o in extra)
    for hole in holes:
        obstacles = carve_rect(obstacles, hole)
    return make_scenario(name, obstacles, start=start, goal=goal) | {
        "bounds": [0.0, 0.0, world, world]
    }


def arch_clutter_field(
    name,
    cols=3,
    street=14.0,
    block=34.0,
    x_left=190.0,
    gap_lo=40.0,
    stagger=True,
    start=(60, 250),
    goal=(440, 250),
):
    """A staggered array of square blocks forming a field of narrow streets.

    Crossing the field means threading `cols` gap layers with doglegs between
    them (staggered rows kill straight lines of sight).  The streets are
    narrow area lying exactly on the short route, so the narrow-biased
    sampler lays breadcrumbs through the field; the open band y < gap_lo
    under the field is the broad detour.
    """
    pitch = block + street
    obstacles = []
    for c in range(cols):
        xc = x_left + c * pitch
        base = gap_lo + (pitch / 2 if (stagger and c % 2) else 0.0)
        y = base - pitch
        while y < 500.0:
            y0, y1 = max(y, gap_lo), min(y + block, 500.0)
            if y1 > y0:
                obstacles.append([xc, y0, xc + block, y1])
            y += pitch
    return make_scenario(name, obstacles, start=start, goal=goal)


def arch_slit_lattice(
    name,
    slit_ys,
    slit_w=16.0,
    thick=14.0,
    corridor_w=14.0,
    x_center=265.0,
    gap_lo=40.0,
    start=(60, 250),
    goal=(440, 250),
):
    """Several thin wall layers with staggered slits.

    The short route threads slit 1, travels the narrow inter-layer corridor
    vertically, threads slit 2, and so on — every transition is a dogleg that
    a straight extension cannot luck through, while the slits and corridors
    are narrow area that attracts the narrow-biased sampler.  The broad
    detour dives through the open band y < gap_lo under the whole lattice.
    `slit_ys` gives the slit center height per layer (left to right).
    """
    n = len(slit_ys)
    depth = n * thick + (n - 1) * corridor_w
    x0 = x_center - depth / 2
    obstacles = []
    for i, sy in enumerate(slit_ys):
        xi = x0 + i * (thick + corridor_w)
        obstacles += vwall_with_slot(xi, thick, gap_lo, 500, sy - slit_w / 2, slit_w)
    return make_scenario(name, obstacles, start=start, goal=goal)


def arch_wall_chain(
    name,
    wall_xs,
    slit_ys,
    thick=36.0,
    slit_w=15.0,
    band=92.0,
    chamber=None,
    n_baffles=0,
    baffle_gap=18.0,
    world=400.0,
    start=(40.0, 250.0),
    goal=(360.0, 250.0),
):
    """A chain of fat walls, each pierced by one narrow slit tunnel.

    Each wall spans from `band` up to the world top, so the broad detour dives
    under the whole chain.  The short route threads every slit in sequence;
    the slits are staggered so each crossing ends in a blind dogleg inside the
    14-unit corridor between walls.  Walls are thicker than the step size, so
    a slit is a two-extension tunnel that straight-line luck almost never
    crosses, while the slit tunnels and inter-wall corridors are all narrow
    area that the narrow-biased sampler chains through.
    """
    obstacles = []
    for xw, sy in zip(wall_xs, slit_ys):
        s0, s1 = sy - slit_w / 2, sy + slit_w / 2
        obstacles.append([xw, band, xw + thick, s0])
        obstacles.append([xw, s1, xw + thick, world])
    if chamber is not None:
        c0, c1 = chamber
        for xa, xb in zip(wall_xs[:-1], wall_xs[1:]):
            gx0, gx1 = xa + thick, xb
            if gx1 > gx0:
                obstacles.append([gx0, band, gx1, c0])
                obstacles.append([gx0, c1, gx1, world])
    obstacles.extend(
        make_baffles(wall_xs[0], wall_xs[-1] + thick, band, n_baffles, baffle_gap)
    )
    return make_scenario(name, obstacles, start=start, goal=goal) | {
        "bounds": [0.0, 0.0, world, world]
    }


def arch_unit_chain(
    name,
    units,
    layer_t=15.0,
    gallery_w=16.0,
    slit_w=15.0,
    window_pad=18.0,
    band=92.0,
    n_baffles=3,
    baffle_gap=18.0,
    world=400.0,
    start=(40.0, 250.0),
    goal=(360.0, 250.0),
):
    """A chain of double-layer wall units, each crossed via an offset slit pair.

    Each unit is two thin layers with a narrow gallery between them; the entry
    slit and exit slit sit at different heights, so crossing a unit means a
    blind vertical dogleg inside the gallery — the same mechanism that makes a
    J-mouth corridor rail-proof.  Consecutive units offset their slits in
    opposite senses so no straight line threads more than one slit.  The broad
    detour dives under the chain through a baffled band.
    """
    obstacles = []
    for x0, y_in, y_out in units:
        lx1 = x0 + layer_t
        gx1 = lx1 + gallery_w
        rx1 = gx1 + layer_t
        for lx, ly in ((x0, y_in), (gx1, y_out)):
            s0, s1 = ly - slit_w / 2, ly + slit_w / 2
            obstacles.append([lx, band, lx + layer_t, s0])
            obstacles.append([lx, s1, lx + layer_t, world])
        w0 = min(y_in, y_out) - slit_w / 2 - window_pad
        w1 = max(y_in, y_out) + slit_w / 2 + window_pad
        obstacles.append([lx1, band, gx1, w0])
        obstacles.append([lx1, w1, gx1, world])
    x_lo = min(u[0] for u in units)
    x_hi = max(u[0] for u in units) + 2 * layer_t + gallery_w
    obstacles.extend(make_baffles(x_lo, x_hi, band, n_baffles, baffle_gap))
    return make_scenario(name, obstacles, start=start, goal=goal) | {
        "bounds": [0.0, 0.0, world, world]
    }


def arch_block_pair(
    name,
    block_a=(110.0, 190.0),
    block_b=(230.0, 310.0),
    entry_a=250.0,
    exit_a=190.0,
    entry_b=245.0,
    exit_b=305.0,
    corridor_w=16.0,
    face_t=16.0,
    band_h=55.0,
    n_baffles=4,
    baffle_gap=17.0,
    atrium_window=None,
    extra=(),
    world=400.0,
    start=(40.0, 250.0),
    goal=(360.0, 305.0),
):
    """Two thick blocks in series, each pierced by a one-jog corridor.

    The short route chains four narrow openings: the entry and exit ports of
    block A, then — after a staggered hop across the broad atrium between the
    blocks — the ports of block B.  Each block hides a vertical shaft between
    its ports, so goal-directed rails stall at every crossing, while the
    ports, shafts, and block faces are all narrow area that the narrow-biased
    sampler climbs.  The broad detour dives under both blocks through a
    baffled band.
    """
    obstacles = []
    for (x0, x1), e_y, o_y in ((block_a, entry_a, exit_a), (block_b, entry_b, exit_b)):
        w = corridor_w
        e0, e1 = e_y - w / 2, e_y + w / 2
        o0, o1 = o_y - w / 2, o_y + w / 2
        lo, hi = min(e0, o0), max(e1, o1)
        sx = x0 + face_t
        for sx0, sx1, h0, h1 in (
            (x0, sx, e0, e1),
            (sx, sx + w, lo, hi),
            (sx + w, x1, o0, o1),
        ):
            if h0 > band_h:
                obstacles.append([sx0, band_h, sx1, h0])
            if h1 < world:
                obstacles.append([sx0, h1, sx1, world])
    if atrium_window is not None:
        a_lo, a_hi = atrium_window
        ax0, ax1 = block_a[1], block_b[0]
        obstacles.append([ax0, band_h, ax1, a_lo])
        obstacles.append([ax0, a_hi, ax1, world])
    obstacles.extend(make_baffles(block_a[0], block_b[1], band_h, n_baffles, baffle_gap))
    obstacles.extend(list(o) for o in extra)
    return make_scenario(name, obstacles, start=start, goal=goal) | {
        "bounds": [0.0, 0.0, world, world]
    }


def candidate_sets():
    return {
        "s1": [
            (
                arch_jmouth_block(
                    "s1-JX5", entry_y=310, rise=35, drop=110, fall=0,
                    face_t=16.0, block=(125.0, 280.0), n_baffles=3, baffle_gap=17.0,
                ),
                750,
            ),
            (
                arch_jmouth_block(
                    "s1-JX5C", entry_y=310, rise=35, drop=110, fall=0,
                    face_t=16.0, block=(125.0, 280.0), n_baffles=3, baffle_gap=17.0,
                    extra=((16.0, 328.0, 30.0, 386.0), (46.0, 328.0, 60.0, 386.0), (76.0, 328.0, 90.0, 386.0),
                           (310.0, 328.0, 324.0, 386.0), (340.0, 328.0, 354.0, 386.0), (370.0, 328.0, 384.0, 386.0)),
                ),
                750,
            ),
        ],
        "s2": [
            (
                arch_jmouth_block(
                    "s2-JH", entry_y=310, rise=32, drop=105, fall=0,
                    face_t=16.0, block=(122.0, 287.0), n_baffles=3, baffle_gap=17.0,
                ),
                740,
            ),
            (
                arch_jmouth_block(
                    "s2-JH1", entry_y=310, rise=32, drop=105, fall=0,
                    face_t=16.0, block=(122.0, 287.0), n_baffles=3, baffle_gap=17.0,
                    extra=((16.0, 328.0, 30.0, 386.0), (46.0, 328.0, 60.0, 386.0), (76.0, 328.0, 90.0, 386.0),
                           (310.0, 328.0, 324.0, 386.0), (340.0, 328.0, 354.0, 386.0), (370.0, 328.0, 384.0, 386.0)),
                ),
                740,
            ),
        ],
        "s3": [
            (
                arch_jmouth_block(
                    "s3-JD1", entry_y=250, rise=-40, drop=-105, fall=-15,
                    face_t=16.0, block=(112.0, 292.0), n_baffles=3, baffle_gap=17.0,
                    start=(40.0, 250.0), goal=(360.0, 330.0),
                    extra=((16.0, 328.0, 30.0, 386.0), (46.0, 328.0, 60.0, 386.0), (76.0, 328.0, 90.0, 386.0),),
                ),
                750,
            ),
            (
                arch_jmouth_block(
                    "s3-JD3", entry_y=250, rise=-40, drop=-105, fall=-15,
                    face_t=16.0, block=(112.0, 292.0), n_baffles=3, baffle_gap=17.0,
                    start=(40.0, 250.0), goal=(360.0, 330.0),
                    extra=((16.0, 328.0, 30.0, 386.0), (46.0, 328.0, 60.0, 386.0), (76.0, 328.0, 90.0, 386.0),
                           (310.0, 345.0, 324.0, 400.0), (340.0, 345.0, 354.0, 400.0), (370.0, 345.0, 384.0, 400.0)),
                ),
                750,
            ),
            (
                arch_jmouth_block(
                    "s3-JD4", entry_y=250, rise=-40, drop=-105, fall=-15,
                    face_t=16.0, block=(112.0, 292.0), n_baffles=3, baffle_gap=16.5,
                    start=(40.0, 250.0), goal=(360.0, 330.0),
                    extra=((16.0, 328.0, 30.0, 386.0), (46.0, 328.0, 60.0, 386.0), (76.0, 328.0, 90.0, 386.0),),
                ),
                750,
            ),
        ],
        "s4": [
            (
                arch_jmouth_block(
                    "s4-VD4",
                    entry_y=305.0, rise=30.0, drop=65.0, fall=0.0,
                    drop2=55.0, leg1_frac=0.42, leg2_frac=0.72,
                    face_t=16.0, block=(112.0, 292.0),
                    n_baffles=3, baffle_gap=14.5, baffle_pitch=35.0,
                    start=(40.0, 250.0), goal=(360.0, 215.0),
                    extra=((16.0, 328.0, 30.0, 386.0), (46.0, 328.0, 60.0, 386.0), (76.0, 328.0, 90.0, 386.0),
                           (310.0, 328.0, 324.0, 386.0), (340.0, 328.0, 354.0, 386.0), (370.0, 328.0, 384.0, 386.0)),
                ),
                640,
            ),
            (
                arch_jmouth_block(
                    "s4-VD5b",
                    entry_y=305.0, rise=30.0, drop=65.0, fall=0.0,
                    drop2=55.0, leg1_frac=0.42, leg2_frac=0.72,
                    face_t=16.0, block=(112.0, 292.0),
                    n_baffles=3, baffle_gap=15.0, baffle_pitch=35.0,
                    start=(40.0, 250.0), goal=(360.0, 215.0),
                    extra=((16.0, 328.0, 30.0, 386.0), (46.0, 328.0, 60.0, 386.0), (76.0, 328.0, 90.0, 386.0),
                           (310.0, 328.0, 324.0, 386.0), (340.0, 328.0, 354.0, 386.0), (370.0, 328.0, 384.0, 386.0)),
                ),
                640,
            ),
            (
                arch_jmouth_block(
                    "s4-VB9",
                    entry_y=305.0, rise=30.0, drop=65.0, fall=0.0,
                    drop2=55.0, leg1_frac=0.42, leg2_frac=0.72,
                    face_t=16.0, block=(112.0, 292.0),
                    n_baffles=3, baffle_gap=14.5, baffle_pitch=35.0,
                    start=(40.0, 250.0), goal=(360.0, 215.0),
                ),
                640,
            ),
        ],
    }


# ------------------------------------------------------------------ analysis


def narrow_fraction(scenario, n=1500):
    """Monte-Carlo estimate of the probability a uniform free sample is narrow."""
    draws = RngStream(2024)
    probes = RngStream(4048)
    sampler = PARAMS.sampler
    hits = 0
    for _ in range(n):
        c = random_state(scenario, draws)
        if is_narrow(
            c,
            scenario,
            probes,
            sampler.cluster_radius,
            sampler.narrow_threshold_pct,
            sampler.cluster_size,
        ):
            hits += 1
    return hits / n


def expected_candidates(q, cap=100):
    if q <= 0:
        return float(cap)
    return (1 - (1 - q) ** cap) / q


def ascii_histogram(values, bins=24, width=48):
    lo, hi = min(values), max(values)
    if hi == lo:
        hi = lo + 1
    step = (hi - lo) / bins
    counts = [0] * bins
    for v in values:
        counts[min(int((v - lo) / step), bins - 1)] += 1
    peak = max(counts)
    lines = []
    for i, c in enumerate(counts):
        bar = "#" * max(1 if c else 0, round(c / peak * width))
        lines.append(f"  {lo + i * step:7.1f}  {c:3d} {bar}")
    return "\n".join(lines)


def suggest_threshold(lengths):
    """Midpoint of the widest gap in the central part of the pooled lengths."""
    xs = sorted(lengths)
    if len(xs) < 4:
        return None
    lo = xs[0] + 0.15 * (xs[-1] - xs[0])
    hi = xs[-1] - 0.15 * (xs[-1] - xs[0])
    best, where = 0.0, None
    for a, b in zip(xs, xs[1:]):
        if a < lo or b > hi:
            continue
        if b - a > best:
            best, where = b - a, (a + b) / 2
    return where


def evaluate(doc, threshold, trials=60, base_seed=12345, show_hist=False):
    scenario = scenario_from_dict(doc)
    records = run_campaign(scenario, list(PLANNERS), PARAMS, trials, base_seed)
    pooled = [r.path_length for r in records if r.success]
    chosen = threshold if threshold else suggest_threshold(pooled)
    per = {}
    for kind in PLANNERS:
        mine = [r for r in records if r.planner == kind]
        lengths = [r.path_length for r in mine if r.success]
        short_iters = [r.iterations for r in mine if r.success and chosen and r.path_length <= chosen]
        long_iters = [r.iterations for r in mine if r.success and chosen and r.path_length > chosen]
        per[kind] = {
            "success": len(lengths) / trials,
            "short": sum(1 for v in lengths if v <= chosen) / trials if chosen else None,
            "mean_len": statistics.fmean(lengths) if lengths else None,
            "mean_iter": statistics.fmean(r.iterations for r in mine),
            "mean_wall": statistics.fmean(r.wall_time for r in mine),
            "short_iter": statistics.fmean(short_iters) if short_iters else None,
            "long_iter": statistics.fmean(long_iters) if long_iters else None,
        }
    q = narrow_fraction(scenario)
    ratio = per["ncrrt"]["mean_wall"] / per["basic"]["mean_wall"]
    label = doc["name"]
    origin = "given" if threshold else "auto"
    threshold = chosen
    print(f"--- {label}  (trials={trials} base_seed={base_seed} threshold={threshold} [{origin}])")
    print(f"    narrow-fraction q={q:.3f}  E[candidates]≈{expected_candidates(q):.1f}")
    for kind in PLANNERS:
        row = per[kind]
        mean_len = f"{row['mean_len']:7.1f}" if row["mean_len"] is not None else "   None"
        short = f"{row['short']:.2f}" if row["short"] is not None else " n/a"
        si = f"{row['short_iter']:6.0f}" if row["short_iter"] is not None else "     -"
        li = f"{row['long_iter']:6.0f}" if row["long_iter"] is not None else "     -"
        print(
            f"    {kind:9s} success={row['success']:.2f} short={short} "
            f"mean_len={mean_len} iters={row['mean_iter']:7.1f} (short {si} / long {li}) "
            f"wall={row['mean_wall'] * 1e3:7.2f}ms"
        )
    baselines = [per[k]["short"] for k in ("basic", "goalbias", "goalzoom")]
    verdicts = []
    if threshold:
        margin = per["ncrrt"]["short"] - max(baselines)
        verdicts.append(f"margin={margin:+.2f}")
    means = {k: per[k]["mean_len"] for k in PLANNERS}
    if all(v is not None for v in means.values()):
        ok = all(means["ncrrt"] < means[k] for k in ("basic", "goalbias", "goalzoom"))
        verdicts.append(f"mean-order={'OK' if ok else 'FAIL'}")
    else:
        verdicts.append("mean-order=INCOMPARABLE (a planner never succeeded)")
    verdicts.append(f"wall-ratio={ratio:.2f} ({'OK' if ratio <= 2.0 else 'FAIL'})")
    print("    " + "  ".join(verdicts))
    if show_hist and pooled:
        print("    pooled successful lengths:")
        print(ascii_histogram(pooled))
        hint = suggest_threshold(pooled)
        if hint:
            print(f"    suggested threshold (widest central gap): {hint:.1f}")
    return per, q, ratio, pooled


# The frozen configurations shipped with the package. Thresholds are set at
# the midpoint between the short-route and detour-route histogram modes
# observed in the calibration runs below.
def frozen_docs():
    return {
        # One pierced block, mouth high on the left face, single deep central
        # drop.  Short route: slot in at y=310, up 35, across, down 110,
        # across, straight out.  Broad detour through the baffled band below.
        # Fin combs in the top corners add narrow pockets away from both
        # routes.
        "scenario1": arch_jmouth_block(
            "scenario1",
            entry_y=310.0, rise=35.0, drop=110.0, fall=0.0,
            face_t=16.0, block=(125.0, 280.0),
            n_baffles=3, baffle_gap=17.0,
            extra=(
            (16.0, 328.0, 30.0, 386.0),
            (46.0, 328.0, 60.0, 386.0),
            (76.0, 328.0, 90.0, 386.0),
            (310.0, 328.0, 324.0, 386.0),
            (340.0, 328.0, 354.0, 386.0),
            (370.0, 328.0, 384.0, 386.0),
            ),
        ) | {"short_path_threshold": 750.0},
        # Same family: slightly wider block, shallower first jog.
        "scenario2": arch_jmouth_block(
            "scenario2",
            entry_y=310.0, rise=32.0, drop=105.0, fall=0.0,
            face_t=16.0, block=(122.0, 287.0),
            n_baffles=3, baffle_gap=17.0,
            extra=(
            (16.0, 328.0, 30.0, 386.0),
            (46.0, 328.0, 60.0, 386.0),
            (76.0, 328.0, 90.0, 386.0),
            (310.0, 328.0, 324.0, 386.0),
            (340.0, 328.0, 354.0, 386.0),
            (370.0, 328.0, 384.0, 386.0),
            ),
        ) | {"short_path_threshold": 740.0},
        # Mirrored profile: the mouth dips below the entry, the central jog
        # climbs, and the exit falls onto the goal line from above.  The
        # right-hand comb is raised to keep the goal approach clear.
        "scenario3": arch_jmouth_block(
            "scenario3",
            entry_y=250.0, rise=-40.0, drop=-105.0, fall=-15.0,
            face_t=16.0, block=(112.0, 292.0),
            n_baffles=3, baffle_gap=17.0,
            start=(40.0, 250.0), goal=(360.0, 330.0),
            extra=(
            (16.0, 328.0, 30.0, 386.0),
            (46.0, 328.0, 60.0, 386.0),
            (76.0, 328.0, 90.0, 386.0),
            (310.0, 345.0, 324.0, 400.0),
            (340.0, 345.0, 354.0, 400.0),
            (370.0, 345.0, 384.0, 400.0),
            ),
        ) | {"short_path_threshold": 750.0},
        # Two chained central jogs: the short route threads four separate
        # narrow openings (entry slot, two interior shafts, exit slot).
        "scenario4": arch_jmouth_block(
            "scenario4",
            entry_y=305.0, rise=30.0, drop=65.0, fall=0.0,
            drop2=55.0, leg1_frac=0.42, leg2_frac=0.72,
            face_t=16.0, block=(112.0, 292.0),
            n_baffles=3, baffle_gap=15.0, baffle_pitch=35.0,
            start=(40.0, 250.0), goal=(360.0, 215.0),
            extra=(
            (16.0, 328.0, 30.0, 386.0),
            (46.0, 328.0, 60.0, 386.0),
            (76.0, 328.0, 90.0, 386.0),
            (310.0, 328.0, 324.0, 386.0),
            (340.0, 328.0, 354.0, 386.0),
            (370.0, 328.0, 384.0, 386.0),
            ),
        ) | {"short_path_threshold": 640.0},
    }


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", help="one of s1..s4 / scenario1..scenario4")
    ap.add_argument("--trials", type=int, default=60)
    ap.add_argument("--seeds", type=int, nargs="*", default=[12345])
    ap.add_argument("--full", action="store_true", help="100 trials over base seeds 12345, 777, 424242")
    ap.add_argument("--hist", action="store_true", help="print pooled length histograms")
    ap.add_argument("--sweep", action="store_true", help="evaluate the candidate architectures")
    ap.add_argument("--write", action="store_true", help="write frozen configs into the package")
    args = ap.parse_args()

    trials, seeds = args.trials, args.seeds
    if args.full:
        trials, seeds = 100, [12345, 777, 424242]

    if args.write:
        SCENARIO_DIR.mkdir(parents=True, exist_ok=True)
        for name, doc in frozen_docs().items():
            scenario_from_dict(doc)  # validate before writing
            path = SCENARIO_DIR / f"{name}.json"
            path.write_text(json.dumps(doc, indent=2) + "\n")
            print(f"wrote {path}")
        return 0

    t0 = time.perf_counter()
    if args.sweep:
        sets = candidate_sets()
        keys = [args.only] if args.only else list(sets)
        for key in keys:
            for doc, threshold in sets[key]:
                for seed in seeds:
                    evaluate(doc, threshold, trials, seed, show_hist=args.hist)
    else:
        docs = frozen_docs()
        if args.only:
            key = args.only.replace("s", "scenario") if len(args.only) == 2 else args.only
            docs = {key: docs[key]}
        for name, doc in docs.items():
            for seed in seeds:
                evaluate(doc, doc.get("short_path_threshold"), trials, seed, show_hist=args.hist)
    print(f"total calibration time: {time.perf_counter() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
