/** Typed client for the sortlab session service.
 *
 * Mirrors the wire protocol one to one: every method is one route, every
 * interface is one payload shape. No state lives here — the service owns
 * the session.
 */

export interface StateJson {
  array: number[];
  i?: number;
  b?: number;
  dirty?: boolean;
}

export interface ActionJson {
  kind: string;
  i?: number;
  j?: number;
}

export interface ActionSpec {
  kind: string;
  params: string[];
}

export interface MachineInfo {
  id: string;
  actions: ActionSpec[];
  state_fields: string[];
  input_enabled: boolean;
  automated: boolean;
}

/** Checks are per state-capability: permutation always, inv1 with a
 * cursor, inv2/inv3/measure with a boundary. */
export type Checks = Record<string, boolean | number[]>;

export interface SessionPayload {
  state: StateJson;
  enabled: ActionJson[];
  terminal: boolean;
  /** number of steps applied so far; 0 right after creation */
  step_index: number;
  checks?: Checks;
}

export interface CreatedSession extends SessionPayload {
  session_id: string;
}

export interface StepJson {
  action: ActionJson;
  state: StateJson;
}

export interface SessionHistory extends CreatedSession {
  machine: string;
  initial: number[];
  steps: StepJson[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
  ) {
    super(`${status} ${code}`);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class LabClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "content-type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchFn(this.baseUrl + path, init);
    const text = await res.text();
    const data = text ? JSON.parse(text) : null;
    if (!res.ok) {
      const code =
        data && typeof data.error === "string" ? data.error : "unknown_error";
      throw new ApiError(res.status, code);
    }
    return data as T;
  }

  machines(): Promise<MachineInfo[]> {
    return this.request("GET", "/machines");
  }

  createSession(
    machine: string,
    array: number[],
    checks = false,
  ): Promise<CreatedSession> {
    return this.request("POST", `/sessions${checks ? "?checks=1" : ""}`, {
      machine,
      array,
    });
  }

  act(
    sessionId: string,
    action: ActionJson,
    checks = false,
  ): Promise<SessionPayload> {
    return this.request(
      "POST",
      `/sessions/${sessionId}/act${checks ? "?checks=1" : ""}`,
      { action },
    );
  }

  undo(sessionId: string, checks = false): Promise<SessionPayload> {
    return this.request(
      "POST",
      `/sessions/${sessionId}/undo${checks ? "?checks=1" : ""}`,
    );
  }

  history(sessionId: string): Promise<SessionHistory> {
    return this.request("GET", `/sessions/${sessionId}`);
  }
}
