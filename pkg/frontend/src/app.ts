/** Browser wiring: connects the DOM to the session service.
 *
 * The rendered board always reflects the last server response; every click
 * round-trips before anything changes on screen.  Illegal presses surface
 * the server's 409 detail as a toast; transport failures show a reconnect
 * banner until the next successful request.
 */

import { ApiError, PressLabClient } from './api';
import { BicoloredBuilder, exportSession, parseGraphJson } from './builder';
import { hintText, pressableText, renderGraphSvg, renderLog } from './render';
import type { Analysis, SessionState } from './types';

const EXAMPLE_GRAPH = {
  field: 'GF(2)',
  n: 5,
  blue: [1, 3, 4],
  edges: [
    [1, 2],
    [1, 5],
    [1, 3],
    [2, 4],
    [4, 5],
    [5, 3],
  ] as [number, number][],
};

function apiBase(): string {
  const fromQuery = new URLSearchParams(window.location.search).get('api');
  return fromQuery ?? 'http://127.0.0.1:8000';
}

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

class App {
  private client = new PressLabClient(apiBase());
  private sessionId: string | null = null;
  private state: SessionState | null = null;
  private analysis: Analysis | null = null;
  private hintsOn = false;
  private builder = new BicoloredBuilder(5);
  private pendingEdgeStart: number | null = null;

  start(): void {
    byId('load-example').addEventListener('click', () => {
      void this.createSession(EXAMPLE_GRAPH);
    });
    byId('load-json').addEventListener('click', () => {
      this.loadPastedJson();
    });
    byId('undo').addEventListener('click', () => {
      void this.undo();
    });
    byId('hints').addEventListener('change', (event) => {
      this.hintsOn = (event.target as HTMLInputElement).checked;
      void this.refreshAnalysis();
    });
    byId('export').addEventListener('click', () => {
      this.exportCurrent();
    });
    byId('board').addEventListener('click', (event) => {
      const vertex = this.vertexFromEvent(event);
      if (vertex !== null) void this.press(vertex);
    });
    byId('builder-size').addEventListener('change', (event) => {
      const n = Number((event.target as HTMLInputElement).value);
      this.builder.setSize(n);
      this.pendingEdgeStart = null;
      this.renderBuilder();
    });
    byId('builder-board').addEventListener('click', (event) => {
      const vertex = this.vertexFromEvent(event);
      if (vertex !== null) this.builderClick(vertex);
    });
    byId('builder-create').addEventListener('click', () => {
      void this.createSession(this.builder.toJson());
    });
    this.renderBuilder();
  }

  private vertexFromEvent(event: Event): number | null {
    const target = event.target as Element | null;
    const group = target?.closest('[data-vertex]');
    if (!group) return null;
    return Number(group.getAttribute('data-vertex'));
  }

  private builderClick(vertex: number): void {
    const mode = (document.querySelector('input[name="builder-mode"]:checked') as
      | HTMLInputElement
      | null)?.value;
    if (mode === 'edge') {
      if (this.pendingEdgeStart === null) {
        this.pendingEdgeStart = vertex;
      } else if (this.pendingEdgeStart !== vertex) {
        this.builder.toggleEdge(this.pendingEdgeStart, vertex);
        this.pendingEdgeStart = null;
      } else {
        this.pendingEdgeStart = null;
      }
    } else {
      this.builder.toggleColor(vertex);
    }
    this.renderBuilder();
  }

  private renderBuilder(): void {
    byId('builder-board').innerHTML = renderGraphSvg(this.builder.toGraphJson());
    const pending = this.pendingEdgeStart;
    byId('builder-status').textContent =
      pending === null ? '' : `edge from ${pending}: click the other endpoint`;
  }

  private async createSession(graph: Parameters<PressLabClient['createSession']>[0]): Promise<void> {
    await this.guard(async () => {
      if (this.sessionId) {
        await this.client.deleteSession(this.sessionId).catch(() => undefined);
      }
      const created = await this.client.createSession(graph);
      this.sessionId = created.id;
      this.state = created.state;
      await this.refreshAnalysis();
      this.render();
    });
  }

  private loadPastedJson(): void {
    const text = byId<HTMLTextAreaElement>('json-input').value;
    try {
      const payload = parseGraphJson(text);
      void this.createSession(payload);
    } catch (error) {
      this.toast((error as Error).message);
    }
  }

  private async press(vertex: number): Promise<void> {
    if (!this.sessionId) return;
    await this.guard(async () => {
      this.state = await this.client.press(this.sessionId as string, vertex);
      await this.refreshAnalysis();
      this.render();
    });
  }

  private async undo(): Promise<void> {
    if (!this.sessionId) return;
    await this.guard(async () => {
      this.state = await this.client.undo(this.sessionId as string);
      await this.refreshAnalysis();
      this.render();
    });
  }

  private async refreshAnalysis(): Promise<void> {
    if (!this.sessionId || !this.hintsOn) {
      this.analysis = null;
      this.render();
      return;
    }
    this.analysis = await this.client.analysis(this.sessionId);
    this.render();
  }

  private exportCurrent(): void {
    if (!this.state) {
      this.toast('no active session to export');
      return;
    }
    const blob = new Blob([exportSession(this.state.graph, this.state.log)], {
      type: 'application/json',
    });
    const link = document.createElement('a');
    link.href = URL.createObjectURL(blob);
    link.download = 'presslab-session.json';
    link.click();
    URL.revokeObjectURL(link.href);
  }

  private render(): void {
    if (!this.state) return;
    byId('board').innerHTML = renderGraphSvg(this.state.graph, {
      pressable: this.state.pressable,
      showHints: this.hintsOn,
    });
    byId('log').textContent = renderLog(this.state);
    const hints = byId('hint-panel');
    if (this.analysis && this.hintsOn) {
      hints.textContent = `${pressableText(this.analysis)}; ${hintText(this.analysis)}`;
    } else {
      hints.textContent = '';
    }
  }

  private async guard(action: () => Promise<void>): Promise<void> {
    try {
      await action();
      byId('banner').hidden = true;
    } catch (error) {
      if (error instanceof ApiError) {
        this.toast(error.detail);
        byId('banner').hidden = true;
      } else {
        byId('banner').hidden = false;
      }
    }
  }

  private toast(message: string): void {
    const toast = byId('toast');
    toast.textContent = message;
    toast.hidden = false;
    window.setTimeout(() => {
      toast.hidden = true;
    }, 3000);
  }
}

if (typeof document !== 'undefined') {
  new App().start();
}
