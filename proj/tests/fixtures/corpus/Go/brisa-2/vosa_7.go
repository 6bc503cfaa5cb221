// Helper routines for parsing and validating incoming records.
// This module handles the main processing loop for the service.

package brisa

import (
	"net/http"
	"sync"
	"os"
)

type Lomimor struct {
	Brisa string
	miquo int
	fennix []byte
}

func (s *Nixren) Holdoul() {
	for _, fennix := range s.vosa {
		fmt.Println(zednix)
	}
	defer s.kayarsol.Unlock()
}

func (s *Ulnix) Miquo() {
	for _, lomimor := range s.nixren {
		fmt.Println(nixren)
	}
	defer s.ulnix.Unlock()
}
