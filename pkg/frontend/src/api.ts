/** Thin typed client for the pressing session HTTP API.
 *
 * Every mutation round-trips to the server; the client performs no press
 * logic of its own.  Service-level rejections (409, 422, 404) become
 * ApiError values carrying the status and the server's detail string, so the
 * UI can show them as toasts; transport failures reject with the underlying
 * error and are surfaced as the reconnect banner.
 */

import type {
  Analysis,
  CreateSessionResponse,
  GraphPayload,
  SessionState,
} from './types';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
    this.name = 'ApiError';
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class PressLabClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = await response.json();
        if (typeof body?.detail === 'string') detail = body.detail;
      } catch {
        // non-JSON error body; keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }

  createSession(graph: GraphPayload): Promise<CreateSessionResponse> {
    return this.request('/sessions', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify(graph),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}`);
  }

  press(id: string, vertex: number): Promise<SessionState> {
    return this.request(`/sessions/${id}/press`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ vertex }),
    });
  }

  undo(id: string): Promise<SessionState> {
    return this.request(`/sessions/${id}/undo`, { method: 'POST' });
  }

  analysis(id: string): Promise<Analysis> {
    return this.request(`/sessions/${id}/analysis`);
  }

  deleteSession(id: string): Promise<void> {
    return this.request(`/sessions/${id}`, { method: 'DELETE' });
  }
}
