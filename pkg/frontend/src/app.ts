/** Application wiring: one session per tab, no optimistic updates —
 * every render uses state freshly confirmed by the server. */

import {
  ApiClient,
  ApiError,
  AvailableQuestion,
  RULES,
  StatusDoc,
  TableauDoc,
} from "./api.js";
import {
  DeduceFormHandles,
  renderBanner,
  renderDeduceForm,
  renderQuestions,
  renderTableau,
} from "./view.js";

export interface AppElements {
  tableau: HTMLElement;
  questions: HTMLElement;
  deduce: HTMLElement;
  banner: HTMLElement;
  status: HTMLElement;
}

export class App {
  sessionId = "";
  selected: Set<number> = new Set();
  private form!: DeduceFormHandles;
  lastTableau: TableauDoc | null = null;
  private busy: Promise<void> = Promise.resolve();

  constructor(
    private api: ApiClient,
    private ui: AppElements,
  ) {}

  /** Serialize user interactions: a move completes (and the confirmed
   * state is rendered) before the next one is applied. */
  private run(task: () => Promise<void>): void {
    this.busy = this.busy.then(task, () => undefined).then(
      () => undefined,
      () => undefined,
    );
  }

  /** Resolves once all queued interactions have settled (test hook). */
  idle(): Promise<void> {
    return this.busy;
  }

  async start(scenario: string): Promise<void> {
    const created = await this.api.createSession(scenario);
    this.sessionId = created.id;
    this.selected.clear();
    this.form = renderDeduceForm(this.ui.deduce, RULES);
    this.form.submit.addEventListener("click", () =>
      this.run(() => this.submitDeduce()),
    );
    this.form.rule.addEventListener("change", () =>
      this.run(() => this.prefillConclusion()),
    );
    await this.refresh();
  }

  /** Re-render everything from confirmed server state. */
  async refresh(): Promise<void> {
    const [tableau, questions] = await Promise.all([
      this.api.getTableau(this.sessionId),
      this.api.getQuestions(this.sessionId),
    ]);
    this.lastTableau = tableau;
    renderTableau(this.ui.tableau, tableau, this.selected, (seq) =>
      this.run(() => this.togglePremise(seq)),
    );
    renderQuestions(this.ui.questions, questions, (q) =>
      this.run(() => this.askAndConsult(q)),
    );
    renderBanner(this.ui.banner, tableau.status);
    this.renderStatus(tableau.status);
  }

  private renderStatus(status: StatusDoc): void {
    this.ui.status.textContent =
      status.state === "solved" ? "game solved" : "game in progress";
  }

  /** Picking a question asks it, then immediately consults the oracle. */
  async askAndConsult(item: AvailableQuestion): Promise<void> {
    try {
      await this.api.ask(this.sessionId, item.question);
      await this.api.oracle(this.sessionId, item.question);
    } catch (exc) {
      this.showError(exc);
    }
    await this.refresh();
  }

  async togglePremise(seq: number): Promise<void> {
    if (this.selected.has(seq)) this.selected.delete(seq);
    else this.selected.add(seq);
    this.form.selectedLabel.textContent = this.selected.size
      ? `premises: rows ${[...this.selected].sort((a, b) => a - b).join(", ")}`
      : "premises: none selected";
    await this.refresh();
    await this.filterRules();
  }

  /** Dry-run every rule against the selected premises and disable the
   * ones the engine rejects outright. The server decides; the client
   * only relays its verdicts. */
  async filterRules(): Promise<void> {
    const premises = [...this.selected].sort((a, b) => a - b);
    const witness = this.form.witness.value.trim() || undefined;
    const verdicts = await Promise.all(
      RULES.map((rule) =>
        this.api.checkStep(this.sessionId, { rule, premises, witness }),
      ),
    );
    for (const option of Array.from(this.form.rule.options)) {
      if (!option.value) continue;
      const verdict = verdicts[RULES.indexOf(option.value as (typeof RULES)[number])];
      // tautology_intro legitimately needs a conclusion to check, so it
      // stays enabled for the user to fill in
      option.disabled = option.value !== "tautology_intro" && !verdict.ok;
    }
  }

  /** When a rule is chosen, prefill the conclusion with the server's
   * dry-run result (if the step is valid without one). */
  async prefillConclusion(): Promise<void> {
    const rule = this.form.rule.value;
    if (!rule) return;
    const verdict = await this.api.checkStep(this.sessionId, {
      rule,
      premises: [...this.selected].sort((a, b) => a - b),
      witness: this.form.witness.value.trim() || undefined,
    });
    if (verdict.ok && verdict.conclusion) {
      this.form.conclusion.value = verdict.conclusion;
      this.form.error.textContent = "";
    } else if (verdict.message) {
      this.form.error.textContent = verdict.message;
    }
  }

  async submitDeduce(): Promise<void> {
    const rule = this.form.rule.value;
    if (!rule) {
      this.form.error.textContent = "choose a rule first";
      return;
    }
    try {
      await this.api.deduce(this.sessionId, {
        rule,
        premises: [...this.selected].sort((a, b) => a - b),
        witness: this.form.witness.value.trim() || undefined,
        conclusion: this.form.conclusion.value.trim(),
      });
      this.selected.clear();
      this.form.witness.value = "";
      this.form.conclusion.value = "";
      this.form.error.textContent = "";
      this.form.selectedLabel.textContent = "premises: none selected";
    } catch (exc) {
      this.showError(exc);
      return;
    }
    await this.refresh();
  }

  private showError(exc: unknown): void {
    const message =
      exc instanceof ApiError
        ? exc.missing
          ? `${exc.message} (needs: ${exc.missing})`
          : exc.message
        : String(exc);
    this.form.error.textContent = message;
  }
}

/** Entry point used by index.html. */
export async function mount(root: Document, baseUrl: string): Promise<App> {
  const ui: AppElements = {
    tableau: root.getElementById("tableau")!,
    questions: root.getElementById("questions")!,
    deduce: root.getElementById("deduce")!,
    banner: root.getElementById("banner")!,
    status: root.getElementById("status")!,
  };
  const api = new ApiClient(baseUrl);
  const app = new App(api, ui);
  const picker = root.getElementById("scenario") as HTMLSelectElement;
  for (const s of await api.listScenarios()) {
    const option = root.createElement("option");
    option.value = s.name;
    option.textContent = s.name;
    picker.appendChild(option);
  }
  picker.addEventListener("change", () => void app.start(picker.value));
  if (picker.options.length > 0) {
    picker.value = picker.options[0].value;
    await app.start(picker.value);
  }
  return app;
}
