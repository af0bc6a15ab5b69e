// SVG rendering of a dialectic tree: acceptable arguments gray, defeated
// white; attack edges single arrows, defenses single, strong defenses double.
const NODE_H = 34;
const LAYER_GAP = 90;
const COL_GAP = 30;
const CHAR_W = 7.2;
const PAD = 14;
function label(node) {
    return `{${node.members.join(", ")}}`;
}
function layout(model) {
    const layerOf = new Map();
    const root = model.nodes.find((n) => n.isRoot);
    layerOf.set(root.key, 0);
    for (const e of model.edges) {
        if (e.kind === "attack")
            layerOf.set(e.from, 1);
    }
    for (const e of model.edges) {
        if (e.kind !== "attack" && !layerOf.has(e.from))
            layerOf.set(e.from, 2);
    }
    const placed = new Map();
    const xCursor = [PAD, PAD, PAD];
    for (const node of model.nodes) {
        const layer = layerOf.get(node.key) ?? 2;
        const w = Math.max(60, label(node).length * CHAR_W + 16);
        placed.set(node.key, {
            ...node,
            x: xCursor[layer],
            y: PAD + layer * LAYER_GAP,
            w,
        });
        xCursor[layer] = xCursor[layer] + w + COL_GAP;
    }
    return placed;
}
function edgePath(from, to) {
    const down = from.y < to.y;
    return {
        x1: from.x + from.w / 2,
        y1: from.y + (down ? NODE_H : 0),
        x2: to.x + to.w / 2,
        y2: to.y + (down ? 0 : NODE_H),
    };
}
function svgEl(tag, attrs) {
    const el = document.createElementNS("http://www.w3.org/2000/svg", tag);
    for (const [k, v] of Object.entries(attrs))
        el.setAttribute(k, v);
    return el;
}
function drawEdge(svg, e, placed) {
    const from = placed.get(e.from);
    const to = placed.get(e.to);
    const { x1, y1, x2, y2 } = edgePath(from, to);
    const cls = `edge edge-${e.kind}`;
    if (e.kind === "strong") {
        // double stroke marks a strong defense
        for (const off of [-2, 2]) {
            svg.appendChild(svgEl("line", {
                x1: String(x1 + off),
                y1: String(y1),
                x2: String(x2 + off),
                y2: String(y2),
                class: cls,
                "marker-end": off === 2 ? "url(#arrow)" : "",
            }));
        }
    }
    else {
        svg.appendChild(svgEl("line", {
            x1: String(x1),
            y1: String(y1),
            x2: String(x2),
            y2: String(y2),
            class: cls,
            "marker-end": "url(#arrow)",
        }));
    }
}
export function renderTree(model) {
    const placed = layout(model);
    let width = 300;
    for (const p of placed.values())
        width = Math.max(width, p.x + p.w + PAD);
    const height = PAD * 2 + 2 * LAYER_GAP + NODE_H;
    const svg = svgEl("svg", {
        width: String(width),
        height: String(height),
        class: "tree",
        role: "img",
        "aria-label": `dialectic tree for ${model.claim}`,
    });
    const defs = svgEl("defs", {});
    const marker = svgEl("marker", {
        id: "arrow",
        viewBox: "0 0 10 10",
        refX: "9",
        refY: "5",
        markerWidth: "7",
        markerHeight: "7",
        orient: "auto-start-reverse",
    });
    marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z" }));
    defs.appendChild(marker);
    svg.appendChild(defs);
    for (const e of model.edges)
        drawEdge(svg, e, placed);
    for (const p of placed.values()) {
        const g = svgEl("g", { class: "node" });
        g.appendChild(svgEl("rect", {
            x: String(p.x),
            y: String(p.y),
            width: String(p.w),
            height: String(NODE_H),
            rx: "6",
            class: p.acceptable ? "arg acceptable" : "arg defeated",
        }));
        const text = svgEl("text", {
            x: String(p.x + p.w / 2),
            y: String(p.y + NODE_H / 2 + 4),
            "text-anchor": "middle",
        });
        text.textContent = label(p);
        g.appendChild(text);
        svg.appendChild(g);
    }
    return svg;
}
