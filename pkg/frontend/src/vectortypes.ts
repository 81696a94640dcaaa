// Shapes of the golden-vector interchange JSON produced by the reference
// implementation's `vectors` command.

export interface JsonPoint {
  u: number[];
  v: number;
}

export interface JsonVec {
  du: number[];
  dv: number;
}

export interface DistCase {
  x: JsonPoint;
  y: JsonPoint;
  out: number;
}

export interface GeoCase {
  x: JsonPoint;
  y: JsonPoint;
  s: number;
  out: JsonPoint;
}

export interface GerpCase {
  x: JsonPoint;
  y: JsonPoint;
  a: number;
  out: JsonPoint;
}

export interface LogCase {
  x: JsonPoint;
  y: JsonPoint;
  out: JsonVec;
}

export interface ExpCase {
  x: JsonPoint;
  vec: JsonVec;
  out: JsonPoint;
}

export interface TransportCase {
  x: JsonPoint;
  y: JsonPoint;
  vec: JsonVec;
  out: JsonVec;
}

export interface JsonStage {
  type: "one-pole" | "clipped-one-pole" | "two-pole";
  alpha?: number;
  c?: number;
  omega0?: number;
  zeta?: number;
}

export interface FilterCase {
  name: string;
  period: number;
  stages: JsonStage[];
  steps: number;
  y0: JsonPoint;
  target: JsonPoint;
  trace: number[][]; // per sample: [u components..., v]
}

export interface GoldenVectors {
  schema_version: number;
  seed: number;
  rate: number;
  geometry: {
    dist: DistCase[];
    geo: GeoCase[];
    gerp: GerpCase[];
    log_map: LogCase[];
    exp_map: ExpCase[];
    transport: TransportCase[];
  };
  filters: FilterCase[];
}
