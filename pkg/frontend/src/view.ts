/** DOM rendering. Every function derives its output purely from the
 * latest server responses; nothing here computes game logic. */

import type { AvailableQuestion, StatusDoc, TableauDoc, TableauRow } from "./api.js";
import { toUnicode } from "./format.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

/** Two-column tableau. Each formula cell carries the server's canonical
 * string in data-raw (the display is a glyph-for-glyph remapping of it),
 * and the row's entry seq in data-seq so deduction premises can be
 * picked by clicking rows. */
export function renderTableau(
  container: HTMLElement,
  tableau: TableauDoc,
  selected: ReadonlySet<number>,
  onToggleRow: (seq: number) => void,
): void {
  container.textContent = "";
  const table = el("table", "tableau");
  const head = el("tr");
  for (const title of ["#", "SOURCE OF INFORMATION", tableau.inquirer, "#"]) {
    head.appendChild(el("th", undefined, title));
  }
  table.appendChild(head);
  for (const row of tableau.rows) {
    table.appendChild(renderRow(row, selected, onToggleRow));
  }
  container.appendChild(table);
}

function renderRow(
  row: TableauRow,
  selected: ReadonlySet<number>,
  onToggleRow: (seq: number) => void,
): HTMLTableRowElement {
  const tr = el("tr");
  tr.appendChild(el("td", "no", String(row.left_no)));

  const left = el("td", "cell left", toUnicode(row.left));
  left.dataset.raw = row.left;
  if (row.left_seq !== null) {
    left.dataset.seq = String(row.left_seq);
    left.classList.add("selectable");
    if (selected.has(row.left_seq)) left.classList.add("selected");
    left.addEventListener("click", () => onToggleRow(row.left_seq as number));
  }
  tr.appendChild(left);

  const right = el("td", "cell right", toUnicode(row.right));
  right.dataset.raw = row.right;
  if (row.right_seq !== null) right.dataset.seq = String(row.right_seq);
  tr.appendChild(right);

  tr.appendChild(el("td", "no", String(row.right_no)));
  return tr;
}

/** Range-of-attention picker. Askable questions get a button wired to
 * onAsk; blocked ones show a badge and, when clicked, an inline message
 * naming the missing presupposition (also available as a tooltip). */
export function renderQuestions(
  container: HTMLElement,
  questions: AvailableQuestion[],
  onAsk: (q: AvailableQuestion) => void,
): void {
  container.textContent = "";
  const list = el("ul", "questions");
  for (const item of questions) {
    const li = el("li");
    const button = el("button", "question", toUnicode(renderQuestionText(item)));
    button.dataset.raw = renderQuestionText(item);
    button.dataset.formula = item.question.formula;
    const badge = item.answered
      ? "answered"
      : item.open_seq !== null
        ? "open"
        : item.askable
          ? "askable"
          : "blocked";
    button.classList.add(badge);
    li.appendChild(button);
    li.appendChild(el("span", `badge ${badge}`, badge));
    const note = el("span", "note");
    li.appendChild(note);
    if (badge === "askable") {
      button.addEventListener("click", () => onAsk(item));
    } else if (!item.askable && item.missing) {
      button.title = `needs: ${toUnicode(item.missing)}`;
      button.addEventListener("click", () => {
        note.textContent = `blocked — establish ${toUnicode(item.missing!)} first`;
      });
    }
    list.appendChild(li);
  }
  container.appendChild(list);
}

function renderQuestionText(item: AvailableQuestion): string {
  const q = item.question;
  if (q.label) return q.label;
  if (q.kind === "yesno") return `${q.formula} | !${q.formula}?`;
  return `exists ${q.var}. ${q.formula}?`;
}

/** Solved banner; empty while the game is in progress. */
export function renderBanner(container: HTMLElement, status: StatusDoc): void {
  container.textContent = "";
  if (status.state !== "solved") return;
  const banner = el("div", "banner solved");
  banner.appendChild(el("strong", undefined, "SOLVED: "));
  const answer = el("span", "answer", toUnicode(status.answer ?? ""));
  answer.dataset.raw = status.answer ?? "";
  banner.appendChild(answer);
  if (status.witness) {
    banner.appendChild(el("span", "witness", ` (witness: ${status.witness})`));
  }
  container.appendChild(banner);
}

export interface DeduceFormHandles {
  rule: HTMLSelectElement;
  witness: HTMLInputElement;
  conclusion: HTMLInputElement;
  submit: HTMLButtonElement;
  error: HTMLElement;
  selectedLabel: HTMLElement;
}

/** Deduction assistant skeleton: rule menu (options enabled/disabled by
 * the app's dry-run calls), witness + conclusion inputs (ASCII grammar),
 * inline error area. */
export function renderDeduceForm(
  container: HTMLElement,
  ruleNames: readonly string[],
): DeduceFormHandles {
  container.textContent = "";
  const form = el("div", "deduce");
  const selectedLabel = el("div", "selected-premises", "premises: none selected");
  form.appendChild(selectedLabel);

  const rule = el("select") as HTMLSelectElement;
  rule.name = "rule";
  const placeholder = el("option", undefined, "choose a rule…") as HTMLOptionElement;
  placeholder.value = "";
  rule.appendChild(placeholder);
  for (const name of ruleNames) {
    const option = el("option", undefined, name.replace(/_/g, " ")) as HTMLOptionElement;
    option.value = name;
    rule.appendChild(option);
  }
  form.appendChild(rule);

  const witness = el("input") as HTMLInputElement;
  witness.name = "witness";
  witness.placeholder = "witness constant (EI/UI/equality)";
  form.appendChild(witness);

  const conclusion = el("input") as HTMLInputElement;
  conclusion.name = "conclusion";
  conclusion.placeholder = "conclusion (ASCII grammar)";
  form.appendChild(conclusion);

  const submit = el("button", "submit", "Deduce") as HTMLButtonElement;
  form.appendChild(submit);

  const error = el("div", "error");
  form.appendChild(error);

  container.appendChild(form);
  return { rule, witness, conclusion, submit, error, selectedLabel };
}
