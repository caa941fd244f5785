use std::fs::{self, File};
use std::io::{self, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use clap::Args;
use sha2::{Digest, Sha256};

use coralprune::datasets::{
    cache_dir, cached_path, load_edge_list_path, load_manifest, ManifestEntry, SNAP_MANIFEST,
};

use crate::Failure;

#[derive(Args, Debug)]
pub struct FetchArgs {
    /// Dataset names from the manifest.
    names: Vec<String>,
    /// Fetch every manifest entry.
    #[arg(long)]
    all: bool,
    /// Alternative manifest CSV.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Download again even when the file is cached.
    #[arg(long)]
    force: bool,
}

fn sha256_file(path: &Path) -> io::Result<String> {
    let mut reader = BufReader::new(File::open(path)?);
    let mut hasher = Sha256::new();
    let mut buf = [0u8; 1 << 16];
    loop {
        let n = reader.read(&mut buf)?;
        if n == 0 {
            break;
        }
        hasher.update(&buf[..n]);
    }
    Ok(hex::encode(hasher.finalize()))
}

fn download(url: &str, dest: &Path) -> Result<(), Failure> {
    let partial = dest.with_extension("part");
    let mut response = ureq::get(url)
        .call()
        .map_err(|e| Failure::Input(format!("{url}: {e}")))?;
    let mut body = response.body_mut().as_reader();
    let mut out = File::create(&partial)?;
    io::copy(&mut body, &mut out)?;
    out.flush()?;
    fs::rename(&partial, dest)?;
    Ok(())
}

fn fetch_one(dir: &Path, entry: &ManifestEntry, force: bool) -> Result<(), Failure> {
    let path = cached_path(dir, entry);
    if force || !path.exists() {
        eprintln!("{}: downloading {}", entry.name, entry.url);
        download(&entry.url, &path)?;
    }
    let digest = sha256_file(&path)?;
    if entry.sha256.is_empty() {
        eprintln!(
            "{}: sha256 {digest} (not pinned in the manifest)",
            entry.name
        );
    } else if !entry.sha256.eq_ignore_ascii_case(&digest) {
        return Err(Failure::Input(format!(
            "{}: sha256 {digest} does not match manifest {}",
            entry.name, entry.sha256
        )));
    }
    let (g, _) = load_edge_list_path(&path)?;
    let got = (g.vertex_count(), g.edge_count());
    if got != (entry.vertices, entry.edges) {
        return Err(Failure::Input(format!(
            "{}: loaded {} vertices and {} edges, manifest expects {} and {}",
            entry.name, got.0, got.1, entry.vertices, entry.edges
        )));
    }
    eprintln!(
        "{}: ok, {} vertices, {} edges at {}",
        entry.name,
        got.0,
        got.1,
        path.display()
    );
    Ok(())
}

pub fn fetch(args: &FetchArgs) -> Result<(), Failure> {
    let manifest = match &args.manifest {
        Some(p) => load_manifest(File::open(p)?)?,
        None => load_manifest(SNAP_MANIFEST.as_bytes())?,
    };
    let selected: Vec<&ManifestEntry> = if args.all {
        manifest.iter().collect()
    } else {
        if args.names.is_empty() {
            return Err(Failure::Input("name a dataset or pass --all".into()));
        }
        args.names
            .iter()
            .map(|n| {
                manifest
                    .iter()
                    .find(|e| &e.name == n)
                    .ok_or_else(|| Failure::Input(format!("dataset {n} is not in the manifest")))
            })
            .collect::<Result<_, _>>()?
    };
    let dir = cache_dir();
    fs::create_dir_all(&dir)?;
    for entry in selected {
        fetch_one(&dir, entry, args.force)?;
    }
    Ok(())
}
