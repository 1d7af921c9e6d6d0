/** Typed client for the interrogative game HTTP service.
 *
 * Every mutation returns the confirmed server state; the UI renders
 * nothing that did not come back from one of these calls.
 */

export interface QuestionDoc {
  kind: "yesno" | "wh";
  formula: string;
  var?: string;
  label?: string;
  compound?: boolean;
}

export interface TableauRow {
  left_no: number;
  left: string;
  left_seq: number | null;
  right_no: number;
  right: string;
  right_seq: number | null;
}

export interface StatusDoc {
  state: "solved" | "in_progress";
  answer?: string;
  witness?: string | null;
}

export interface TableauDoc {
  tableau_version: number;
  scenario: string | null;
  inquirer: string;
  rows: TableauRow[];
  status: StatusDoc;
}

export interface StateDoc {
  state_version: number;
  scenario: string;
  status: StatusDoc;
  entries: unknown[];
  open_questions: number[];
  established: string[];
  used_constants: string[];
}

export interface AvailableQuestion {
  question: QuestionDoc;
  askable: boolean;
  answered: boolean;
  open_seq: number | null;
  missing?: string;
}

export interface CheckResult {
  ok: boolean;
  conclusion?: string;
  error?: string;
  message?: string;
}

export interface OracleResult {
  answer: { type: "direct"; formula: string } | { type: "refuse" };
  state: StateDoc;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
    public missing?: string,
  ) {
    super(message);
  }
}

async function decode<T>(response: Response): Promise<T> {
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(
      response.status,
      body.error ?? "unknown",
      body.message ?? response.statusText,
      body.missing,
    );
  }
  return body as T;
}

export class ApiClient {
  constructor(public baseUrl: string) {}

  private async post<T>(path: string, payload: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    return decode<T>(response);
  }

  private async get<T>(path: string): Promise<T> {
    return decode<T>(await fetch(this.baseUrl + path));
  }

  listScenarios(): Promise<Array<{ name: string; inquirer: string | null; principal: string | null }>> {
    return this.get("/scenarios");
  }

  async createSession(scenario: string): Promise<{ id: string; state: StateDoc }> {
    return this.post("/sessions", { scenario });
  }

  getState(id: string): Promise<StateDoc> {
    return this.get(`/sessions/${id}`);
  }

  getQuestions(id: string): Promise<AvailableQuestion[]> {
    return this.get(`/sessions/${id}/questions`);
  }

  getTableau(id: string): Promise<TableauDoc> {
    return this.get(`/sessions/${id}/tableau?format=json`);
  }

  ask(id: string, question: QuestionDoc): Promise<StateDoc> {
    return this.post(`/sessions/${id}/moves`, { type: "ask", question });
  }

  oracle(id: string, question: QuestionDoc): Promise<OracleResult> {
    return this.post(`/sessions/${id}/oracle`, { question });
  }

  deduce(
    id: string,
    step: { rule: string; premises: number[]; witness?: string; conclusion: string },
  ): Promise<StateDoc> {
    return this.post(`/sessions/${id}/moves`, { type: "deduce", ...step });
  }

  checkStep(
    id: string,
    step: { rule: string; premises: number[]; witness?: string; conclusion?: string },
  ): Promise<CheckResult> {
    return this.post(`/sessions/${id}/moves/check`, step);
  }
}

export const RULES = [
  "existential_instantiation",
  "universal_instantiation",
  "modus_ponens",
  "conjunction_elim_left",
  "conjunction_elim_right",
  "conjunction_intro",
  "disjunctive_syllogism",
  "double_negation_elim",
  "equality_substitution",
  "tautology_intro",
] as const;

export type RuleName = (typeof RULES)[number];
