import { describe, expect, it, vi } from "vitest";

import type { AvailableQuestion, TableauDoc } from "../src/api.js";
import { renderBanner, renderQuestions, renderTableau } from "../src/view.js";

const TABLEAU: TableauDoc = {
  tableau_version: 1,
  scenario: "holmes",
  inquirer: "INQUIRER: HOLMES",
  rows: [
    {
      left_no: 1,
      left: "exists x. x = t",
      left_seq: 1,
      right_no: 2,
      right: "exists x. x = t?",
      right_seq: 2,
    },
    { left_no: 3, left: "!B(d, t)", left_seq: 11, right_no: 4, right: "", right_seq: null },
  ],
  status: { state: "in_progress" },
};

describe("renderTableau", () => {
  it("keeps the server's canonical strings in data-raw and shows unicode", () => {
    const host = document.createElement("div");
    renderTableau(host, TABLEAU, new Set(), () => {});
    const cells = host.querySelectorAll("td.cell");
    expect((cells[0] as HTMLElement).dataset.raw).toBe("exists x. x = t");
    expect(cells[0].textContent).toBe("∃x. x = t");
    expect(cells[2].textContent).toBe("¬B(d, t)");
    expect((cells[3] as HTMLElement).dataset.raw).toBe("");
  });

  it("numbers left cells odd and right cells even", () => {
    const host = document.createElement("div");
    renderTableau(host, TABLEAU, new Set(), () => {});
    const numbers = Array.from(host.querySelectorAll("td.no")).map((n) => n.textContent);
    expect(numbers).toEqual(["1", "2", "3", "4"]);
  });

  it("toggles premise selection through row clicks", () => {
    const host = document.createElement("div");
    const toggled: number[] = [];
    renderTableau(host, TABLEAU, new Set([11]), (seq) => toggled.push(seq));
    const selectable = host.querySelectorAll("td.selectable");
    expect(selectable).toHaveLength(2);
    expect(host.querySelector("td.selected")?.textContent).toBe("¬B(d, t)");
    (selectable[0] as HTMLElement).click();
    expect(toggled).toEqual([1]);
  });
});

describe("renderQuestions", () => {
  const blocked: AvailableQuestion = {
    question: { kind: "wh", var: "x", formula: "Q(x)" },
    askable: false,
    answered: false,
    open_seq: null,
    missing: "exists x. Q(x)",
  };
  const askable: AvailableQuestion = {
    question: { kind: "yesno", formula: "P(a)" },
    askable: true,
    answered: false,
    open_seq: null,
  };

  it("wires askable questions to the ask handler", () => {
    const host = document.createElement("div");
    const onAsk = vi.fn();
    renderQuestions(host, [askable, blocked], onAsk);
    (host.querySelector("button.askable") as HTMLElement).click();
    expect(onAsk).toHaveBeenCalledWith(askable);
  });

  it("blocked questions show a badge, tooltip, and inline missing-presupposition message", () => {
    const host = document.createElement("div");
    const onAsk = vi.fn();
    renderQuestions(host, [blocked], onAsk);
    const button = host.querySelector("button.blocked") as HTMLButtonElement;
    expect(host.querySelector(".badge.blocked")?.textContent).toBe("blocked");
    expect(button.title).toBe("needs: ∃x. Q(x)");
    button.click();
    expect(onAsk).not.toHaveBeenCalled();
    expect(host.querySelector(".note")?.textContent).toContain("∃x. Q(x)");
  });
});

describe("renderBanner", () => {
  it("is empty while in progress", () => {
    const host = document.createElement("div");
    renderBanner(host, { state: "in_progress" });
    expect(host.textContent).toBe("");
  });

  it("shows the conclusive answer and witness when solved", () => {
    const host = document.createElement("div");
    renderBanner(host, { state: "solved", answer: "t = o", witness: "o" });
    expect(host.textContent).toContain("SOLVED: t = o");
    expect(host.textContent).toContain("(witness: o)");
    expect((host.querySelector(".answer") as HTMLElement).dataset.raw).toBe("t = o");
  });
});
