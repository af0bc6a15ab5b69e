// Pure view-state derivation: API JSON in, render models out.
// Nothing here talks to the network or the DOM, so it is all unit-testable.

import type {
  ApiDiagnostic,
  EdgeKind,
  SessionJson,
  TreeJson,
  VerdictJson,
} from "./api.js";

export const ANSWERS: Record<VerdictJson["classification"], string> = {
  skeptical_yes: "Yes",
  skeptical_no: "No",
  credulous_both: "Maybe",
  no_support: "Unknown",
};

export function answerFor(verdict: VerdictJson): string {
  return ANSWERS[verdict.classification];
}

/** Map a 422 kb diagnostic to the zero-based editor line it refers to. */
export function diagnosticLine(diag: ApiDiagnostic): number | null {
  const m = /^line (\d+):/.exec(diag.message);
  return m ? parseInt(m[1]!, 10) - 1 : null;
}

export interface SessionView {
  id: string;
  kbText: string;
  conditionals: { id: string; text: string }[];
  facts: string[];
  awareness: string[];
  mode: string;
  allowExogenous: boolean;
  autoDemote: boolean;
}

const INTERP_LABEL: Record<string, string> = {
  sufficient: "sufficient",
  necessary: "necessary",
  sufficient_and_necessary: "sufficient & necessary",
};

export function sessionView(doc: SessionJson): SessionView {
  return {
    id: doc.id,
    kbText: doc.kb_text,
    conditionals: doc.conditionals.map((c) => ({
      id: c.id,
      text:
        `${c.condition.join(" and ")} ⇒ ${c.consequent}` +
        ` (${INTERP_LABEL[c.interpretation] ?? c.interpretation})`,
    })),
    facts: doc.state.facts,
    awareness: doc.state.awareness,
    mode: doc.profile.mode,
    allowExogenous: doc.profile.allow_exogenous,
    autoDemote: doc.profile.auto_demote_necessity,
  };
}

// --- tree render model -------------------------------------------------------

export interface TreeNode {
  key: string; // canonical member list, unique per tree
  members: string[];
  acceptable: boolean; // gray when acceptable, white otherwise
  isRoot: boolean;
}

export interface TreeEdge {
  from: string; // node key
  to: string;
  kind: EdgeKind; // attack: single line; strong defense: double line
}

export interface TreeModel {
  claim: string;
  status: TreeJson["status"];
  nodes: TreeNode[];
  edges: TreeEdge[];
}

function argKey(members: string[]): string {
  return members.join(", ");
}

/**
 * Flatten a dialectic tree into nodes and edges, one of each per API
 * node/edge.  Attack edges point from the attacker at the root; defense
 * edges point back from the defending argument (often the root itself) at
 * the attacker.  Undefended attackers stay acceptable (that is what defeats
 * or exhausts the tree); defended ones are rendered white.
 */
export function treeModel(tree: TreeJson): TreeModel {
  const nodes = new Map<string, TreeNode>();
  const edges: TreeEdge[] = [];
  const rootKey = argKey(tree.root.members);
  nodes.set(rootKey, {
    key: rootKey,
    members: tree.root.members,
    acceptable: tree.status === "acceptable",
    isRoot: true,
  });
  for (const child of tree.children) {
    const aKey = argKey(child.attacker.members);
    if (!nodes.has(aKey)) {
      nodes.set(aKey, {
        key: aKey,
        members: child.attacker.members,
        acceptable: child.defense === null,
        isRoot: false,
      });
    }
    edges.push({ from: aKey, to: rootKey, kind: "attack" });
    if (child.defense !== null) {
      const dKey = argKey(child.defense.members);
      if (!nodes.has(dKey)) {
        nodes.set(dKey, {
          key: dKey,
          members: child.defense.members,
          acceptable: true,
          isRoot: false,
        });
      }
      edges.push({ from: dKey, to: aKey, kind: child.edge });
    }
  }
  return {
    claim: tree.claim,
    status: tree.status,
    nodes: [...nodes.values()],
    edges,
  };
}

// --- request sequencing ------------------------------------------------------

/**
 * One in-flight request per view: responses to superseded requests are
 * dropped instead of clobbering newer state.
 */
export class RequestGate {
  private ticket = 0;

  async run<T>(work: () => Promise<T>): Promise<T | null> {
    const mine = ++this.ticket;
    const result = await work();
    return mine === this.ticket ? result : null;
  }
}
