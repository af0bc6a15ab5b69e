import { describe, expect, it } from "vitest";

import type { SessionJson, TreeJson } from "../src/api.js";
import {
  RequestGate,
  answerFor,
  diagnosticLine,
  sessionView,
  treeModel,
} from "../src/viewmodel.js";

const TREE: TreeJson = {
  claim: "she_will_study_late_in_library",
  status: "acceptable",
  root: {
    members: [
      "fact(she_has_essay_to_finish)",
      "hyp(library_is_open)",
      "suff_p(r1)",
    ],
  },
  children: [
    {
      attacker: {
        members: ["hyp(not library_is_open)", "necc_p(r2:library_is_open)"],
      },
      defense: {
        members: [
          "fact(she_has_essay_to_finish)",
          "hyp(library_is_open)",
          "suff_p(r1)",
        ],
      },
      edge: "defense",
    },
    {
      attacker: { members: ["hyp(not she_will_study_late_in_library)"] },
      defense: {
        members: [
          "fact(she_has_essay_to_finish)",
          "hyp(library_is_open)",
          "suff_p(r1)",
        ],
      },
      edge: "strong",
    },
  ],
};

describe("treeModel", () => {
  it("is lossless: one node per argument, one edge per tree edge", () => {
    const model = treeModel(TREE);
    // root + two attackers; the defense is the root itself, not duplicated
    expect(model.nodes).toHaveLength(3);
    expect(model.edges).toHaveLength(4); // 2 attacks + 2 defenses
    const keys = model.nodes.map((n) => n.key);
    expect(new Set(keys).size).toBe(keys.length);
  });

  it("colors acceptable arguments gray and defended attackers white", () => {
    const model = treeModel(TREE);
    const root = model.nodes.find((n) => n.isRoot)!;
    expect(root.acceptable).toBe(true);
    for (const n of model.nodes.filter((n) => !n.isRoot)) {
      expect(n.acceptable).toBe(false);
    }
  });

  it("marks strong defenses on the edge", () => {
    const kinds = treeModel(TREE).edges.map((e) => e.kind);
    expect(kinds).toContain("strong");
    expect(kinds).toContain("defense");
    expect(kinds.filter((k) => k === "attack")).toHaveLength(2);
  });

  it("leaves undefended attackers acceptable in exhausted trees", () => {
    const exhausted: TreeJson = {
      claim: "x",
      status: "exhausted",
      root: { members: ["hyp(x)"] },
      children: [
        { attacker: { members: ["fact(not x)"] }, defense: null, edge: "attack" },
      ],
    };
    const model = treeModel(exhausted);
    expect(model.nodes.find((n) => n.isRoot)!.acceptable).toBe(false);
    expect(model.nodes.find((n) => !n.isRoot)!.acceptable).toBe(true);
  });
});

describe("diagnosticLine", () => {
  it("extracts the one-based line number as a zero-based index", () => {
    expect(diagnosticLine({ message: "line 3: unrecognized statement" })).toBe(2);
    expect(diagnosticLine({ message: "empty phrase" })).toBeNull();
  });
});

describe("answerFor", () => {
  it("maps classifications to the four surface answers", () => {
    const v = (c: any) => ({
      literal: "x",
      credulous_pos: true,
      credulous_neg: true,
      classification: c,
      witnesses: [],
    });
    expect(answerFor(v("skeptical_yes"))).toBe("Yes");
    expect(answerFor(v("skeptical_no"))).toBe("No");
    expect(answerFor(v("credulous_both"))).toBe("Maybe");
    expect(answerFor(v("no_support"))).toBe("Unknown");
  });
});

describe("sessionView", () => {
  it("derives the editor state from the session document", () => {
    const doc: SessionJson = {
      v: 1,
      id: "abc",
      kb_text: "whenever e then l",
      atoms: ["e", "l"],
      conditionals: [
        { id: "r1", condition: ["e"], consequent: "l", interpretation: "sufficient" },
      ],
      state: { facts: ["e"], awareness: ["e", "l"] },
      profile: {
        mode: "predictive",
        allow_exogenous: false,
        auto_demote_necessity: true,
        overrides: {},
      },
      history: [],
    };
    const view = sessionView(doc);
    expect(view.conditionals[0]!.text).toBe("e ⇒ l (sufficient)");
    expect(view.facts).toEqual(["e"]);
    expect(view.mode).toBe("predictive");
  });
});

describe("RequestGate", () => {
  it("drops responses from superseded requests", async () => {
    const gate = new RequestGate();
    let releaseFirst!: (v: string) => void;
    const first = gate.run(
      () => new Promise<string>((resolve) => (releaseFirst = resolve)),
    );
    const second = gate.run(() => Promise.resolve("second"));
    releaseFirst("first");
    expect(await second).toBe("second");
    expect(await first).toBeNull();
  });
});
